#ifndef RLAT_CLI_HPP
#define RLAT_CLI_HPP

#include <iosfwd>
#include <string>

namespace rlat::cli {

// Exit codes: 0 success/found, 1 none-found, 2 parse error, 3 axiom failure,
// 4 capacity.

std::size_t default_cap();  // RLAT_CAP env override, 2²⁰ otherwise

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::string& path, const std::string& format, std::ostream& out,
                std::ostream& err);
int cmd_audit_file(const std::string& path, const std::string& format, std::ostream& out,
                   std::ostream& err);
int cmd_audit_enumerate(int max_order, std::size_t cap, const std::string& format,
                        std::ostream& out, std::ostream& err);
int cmd_search(const std::string& expr, int max_order, std::size_t cap, std::ostream& out,
               std::ostream& err);
int cmd_export(const std::string& path, const std::string& what, const std::string& format,
               std::ostream& out, std::ostream& err);

}  // namespace rlat::cli

#endif

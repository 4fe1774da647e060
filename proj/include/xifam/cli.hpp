#ifndef XIFAM_CLI_HPP
#define XIFAM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace xifam::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,       // invalid pair, class mismatch, product above 2^n
  kInputError = 2,   // bad arguments, malformed or out-of-range input
  kBudget = 3,       // search stopped at its node budget
};

// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_check_pair(const std::string& path, std::ostream& out, std::ostream& err);

struct SearchOptions {
  int n = 0;
  std::string frac;
  bool canonicalize = false;
  unsigned long long max_nodes = 100'000'000;
  int threads = 1;
  std::string out_path;
};
int cmd_search(const SearchOptions& opts, std::ostream& out, std::ostream& err);

int cmd_gen(int n, const std::string& frac, int k, const std::string& out_path, std::ostream& out,
            std::ostream& err);

int cmd_binom_pow2(int max_n, const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_sym_search(int n, const std::string& frac, unsigned long long max_nodes,
                   const std::string& out_path, std::ostream& out, std::ostream& err);

}  // namespace xifam::cli

#endif  // XIFAM_CLI_HPP

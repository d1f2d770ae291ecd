// Acceptance suite: runs every named check at full size and prints one
// pass/fail line per criterion.  Exit code 0 when everything passes, 2
// otherwise (mirrors the CLI contract).

#include <cstdio>
#include <cstring>
#include <string>

#include "zetalab/certify.hpp"

int main(int argc, char** argv) {
  zetalab::CertifyOptions opt;
#ifdef ZETALAB_CLI_PATH
  opt.cli_path = ZETALAB_CLI_PATH;
#endif
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) opt.cli_path = argv[++i];
  }

  const auto results = zetalab::run_certify(opt);
  std::fputs(zetalab::render_certify_report(results).c_str(), stdout);
  return zetalab::all_passed(results) ? 0 : 2;
}

#include <cstdio>

#include <catfib.h>

int main(int argc, char** argv) {
  cf_report* report = nullptr;
  cf_run(argc - 1, argv + 1, &report);
  if (!report) {
    std::fputs("internal error\n", stderr);
    return 3;
  }
  const int code = cf_report_exit_code(report);
  std::fputs(cf_report_output(report), stdout);
  cf_report_free(report);
  return code;
}

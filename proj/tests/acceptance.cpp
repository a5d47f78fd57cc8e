// Acceptance suite: runs every verification criterion at its stated
// tolerance (exact equality throughout) and prints one pass/fail line per
// criterion. Criterion 12 exercises the real CLI binary, whose path is
// argv[1]: byte-identical `verify` output on repeated runs and the exit-code
// contract, including the negative-control corruption hook.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "genera/verify.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-genera-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    genera::VerifyOptions options;
    options.seed = 12345;
    const std::vector<genera::CheckResult> results = genera::run_acceptance_checks(options);

    bool all_ok = true;
    for (const genera::CheckResult& r : results) {
        if (r.number == 12) continue;  // folded into the CLI-level line below
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.number << ": " << r.name
                  << "\n";
        all_ok = all_ok && r.pass;
    }

    bool cli_ok = true;
    {
        const RunResult a = run_command(cli + " verify --seed 42");
        const RunResult b = run_command(cli + " verify --seed 42");
        if (a.exit_code != 0 || b.exit_code != 0) cli_ok = false;
        if (a.output.empty() || a.output != b.output) cli_ok = false;

        const RunResult corrupted = run_command(cli + " verify --seed 42 --corrupt-ktable");
        if (corrupted.exit_code != 1) cli_ok = false;

        const RunResult usage = run_command(cli + " coeffs --genus no_such_genus");
        if (usage.exit_code != 2) cli_ok = false;

        for (const genera::CheckResult& r : results)
            if (r.number == 12) cli_ok = cli_ok && r.pass;
    }
    std::cout << (cli_ok ? "[PASS]" : "[FAIL]")
              << " criterion 12: CLI determinism and exit-code contract\n";
    all_ok = all_ok && cli_ok;

    std::cout << (all_ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES\n");
    return all_ok ? 0 : 1;
}

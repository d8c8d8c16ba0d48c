#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace modinv {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitMathDomain = 3,
    kExitIo = 4,
};

struct CliConfig {
    int digits = 12;           // significant digits in printed values, 1..17
    double tol = 1e-9;         // verification tolerance
    bool klein = false;        // scale j outputs by 1728
    std::uint64_t seed = 1;    // round-trip sweep seed
};

int cmd_jeval(std::string_view tau_literal, const CliConfig& cfg,
              std::ostream& out, std::ostream& err);

int cmd_jinv(std::string_view x_literal, const CliConfig& cfg,
             std::ostream& out, std::ostream& err);

// json_path empty means no JSON report.
int cmd_verify(const CliConfig& cfg, const std::string& json_path,
               std::ostream& out, std::ostream& err);

int cmd_roundtrip(long samples, const CliConfig& cfg,
                  std::ostream& out, std::ostream& err);

int cmd_figure(const std::string& out_path, const CliConfig& cfg,
               std::ostream& out, std::ostream& err);

} // namespace modinv

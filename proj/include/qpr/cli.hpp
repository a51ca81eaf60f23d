#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qpr::cli {

// Exit codes: 0 success, 1 usage/input error, 2 negativity-violation from
// certify (a structurally impossible pair).
struct CommandResult {
  int exit_code = 0;
  std::optional<std::string> report_path;
  std::string summary;
};

struct FrameBuildOptions {
  std::string kind;  // wootters | sic2 | mub | random-povm | random
  int d = 2;
  int n = 0;  // random kinds only; defaults to d^2 when 0
  std::uint64_t seed = 0;
  std::string out_path;
};

CommandResult cmd_frame_build(const FrameBuildOptions& opts);

CommandResult cmd_frame_check(const std::string& frame_path,
                              const std::optional<std::string>& out_path,
                              double tol);

struct DualOptions {
  std::string frame_path;
  std::string mode;  // canonical | optimize
  int iters = 2000;
  double step0 = 0.5;
  std::uint64_t seed = 0;
  std::string out_path;
};

// mode=optimize also writes <out>.report.json with {value, iters, seed, trace}.
CommandResult cmd_dual(const DualOptions& opts);

CommandResult cmd_certify(const std::string& frame_path, const std::string& dual_path,
                          const std::optional<std::string>& out_path);

struct RepOptions {
  std::string mode;  // state | effect | born
  std::optional<std::string> frame_path;
  std::optional<std::string> dual_path;
  std::optional<std::string> state_path;
  std::optional<std::string> effect_path;
};

CommandResult cmd_rep(const RepOptions& opts);

struct WignerOptions {
  std::string state_path;
  std::optional<std::string> grid_spec;  // "qmin,qmax,pmin,pmax,nq,np"
  std::string out_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> marginals_path;
  bool with_reconstruct = false;
};

CommandResult cmd_wigner(const WignerOptions& opts);

}  // namespace qpr::cli

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qpr/cli.hpp"

namespace {

int finish(const qpr::cli::CommandResult& r) {
  if (r.exit_code == 0)
    std::printf("%s\n", r.summary.c_str());
  else
    std::fprintf(stderr, "error: %s\n", r.summary.c_str());
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpr - operator frames, dual frames and quasi-probability representations"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol = 1e-10;
  app.add_option("--seed", seed, "seed for the deterministic generator")->capture_default_str();
  app.add_option("--tol", tol, "numerical tolerance for checks")->capture_default_str();

  qpr::cli::CommandResult result{1, std::nullopt, "no command"};

  // frame build / frame check
  auto* frame = app.add_subcommand("frame", "build or inspect frames");
  frame->require_subcommand(1);
  {
    auto opts = std::make_shared<qpr::cli::FrameBuildOptions>();
    auto* build = frame->add_subcommand("build", "construct a named or random frame");
    build->add_option("--kind", opts->kind, "wootters | sic2 | mub | random-povm | random")
        ->required();
    build->add_option("--d", opts->d, "Hilbert space dimension")->capture_default_str();
    build->add_option("--n", opts->n, "element count (random kinds; default d^2)");
    build->add_option("--out", opts->out_path, "output frame JSON path")->required();
    build->callback([&result, opts, &seed] {
      opts->seed = seed;
      result = qpr::cli::cmd_frame_build(*opts);
    });

    auto in_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto* check = frame->add_subcommand("check", "validate a frame file and report its properties");
    check->add_option("--in", *in_path, "frame JSON path")->required();
    check->add_option("--out", *out_path, "optional report JSON path");
    check->callback([&result, in_path, out_path, &tol] {
      result = qpr::cli::cmd_frame_check(
          *in_path, out_path->empty() ? std::nullopt : std::make_optional(*out_path), tol);
    });
  }

  // dual canonical / dual optimize
  auto* dual = app.add_subcommand("dual", "compute dual frames");
  dual->require_subcommand(1);
  {
    auto opts = std::make_shared<qpr::cli::DualOptions>();
    auto* canonical = dual->add_subcommand("canonical", "minimal-norm dual");
    canonical->add_option("--frame", opts->frame_path, "frame JSON path")->required();
    canonical->add_option("--out", opts->out_path, "output dual JSON path")->required();
    canonical->callback([&result, opts] {
      opts->mode = "canonical";
      result = qpr::cli::cmd_dual(*opts);
    });

    auto oopts = std::make_shared<qpr::cli::DualOptions>();
    auto* optimize =
        dual->add_subcommand("optimize", "maximize the minimum dual eigenvalue over all duals");
    optimize->add_option("--frame", oopts->frame_path, "frame JSON path")->required();
    optimize->add_option("--out", oopts->out_path, "output dual JSON path")->required();
    optimize->add_option("--iters", oopts->iters, "subgradient iterations")->capture_default_str();
    optimize->add_option("--step0", oopts->step0, "initial step size")->capture_default_str();
    optimize->callback([&result, oopts, &seed] {
      oopts->mode = "optimize";
      oopts->seed = seed;
      result = qpr::cli::cmd_dual(*oopts);
    });
  }

  // certify
  {
    auto frame_path = std::make_shared<std::string>();
    auto dual_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto* certify = app.add_subcommand("certify", "locate negativity in a frame/dual pair");
    certify->add_option("--frame", *frame_path, "frame JSON path")->required();
    certify->add_option("--dual", *dual_path, "dual JSON path (hash-checked)")->required();
    certify->add_option("--out", *out_path, "negativity report JSON path");
    certify->callback([&result, frame_path, dual_path, out_path] {
      result = qpr::cli::cmd_certify(
          *frame_path, *dual_path,
          out_path->empty() ? std::nullopt : std::make_optional(*out_path));
    });
  }

  // rep state|effect|born
  auto* rep = app.add_subcommand("rep", "quasi-probability values of states and effects");
  rep->require_subcommand(1);
  {
    struct RepPaths {
      std::string frame, dual, state, effect;
    };
    const char* descriptions[3] = {"map a state through the frame",
                                   "map an effect through the dual",
                                   "compare Born rule and classical sum"};
    const char* modes[3] = {"state", "effect", "born"};
    for (int i = 0; i < 3; ++i) {
      auto paths = std::make_shared<RepPaths>();
      auto* sub = rep->add_subcommand(modes[i], descriptions[i]);
      sub->add_option("--frame", paths->frame, "frame JSON path");
      sub->add_option("--dual", paths->dual, "dual JSON path");
      sub->add_option("--state", paths->state, "state operator JSON path");
      sub->add_option("--effect", paths->effect, "effect operator JSON path");
      const std::string mode = modes[i];
      sub->callback([&result, paths, mode] {
        qpr::cli::RepOptions o;
        o.mode = mode;
        if (!paths->frame.empty()) o.frame_path = paths->frame;
        if (!paths->dual.empty()) o.dual_path = paths->dual;
        if (!paths->state.empty()) o.state_path = paths->state;
        if (!paths->effect.empty()) o.effect_path = paths->effect;
        result = qpr::cli::cmd_rep(o);
      });
    }
  }

  // wigner transform
  auto* wigner = app.add_subcommand("wigner", "phase-space transforms of Fock-basis states");
  wigner->require_subcommand(1);
  {
    auto opts = std::make_shared<qpr::cli::WignerOptions>();
    auto grid = std::make_shared<std::string>();
    auto csv = std::make_shared<std::string>();
    auto marg = std::make_shared<std::string>();
    auto* transform = wigner->add_subcommand("transform", "sample the Wigner function on a grid");
    transform->add_option("--state", opts->state_path, "Fock-basis density operator JSON")
        ->required();
    transform->add_option("--grid", *grid, "qmin,qmax,pmin,pmax,nq,np");
    transform->add_option("--out", opts->out_path, "output WignerGrid JSON path")->required();
    transform->add_option("--csv", *csv, "optional CSV export path");
    transform->add_option("--marginals", *marg, "optional marginals JSON path");
    transform->add_flag("--reconstruct", opts->with_reconstruct,
                        "report the transform-then-reconstruct residual");
    transform->callback([&result, opts, grid, csv, marg] {
      if (!grid->empty()) opts->grid_spec = *grid;
      if (!csv->empty()) opts->csv_path = *csv;
      if (!marg->empty()) opts->marginals_path = *marg;
      result = qpr::cli::cmd_wigner(*opts);
    });
  }

  CLI11_PARSE(app, argc, argv);
  return finish(result);
}

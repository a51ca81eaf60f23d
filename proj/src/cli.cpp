#include "qpr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpr/errors.hpp"
#include "qpr/json_io.hpp"
#include "qpr/quasi_rep.hpp"
#include "qpr/wigner_cv.hpp"

namespace qpr::cli {

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string frame_summary(const FrameReport& r) {
  const std::string bounds =
      "(" + fmt("%.4g", r.bounds.a) + ", " + fmt("%.4g", r.bounds.b) + ")";
  if (r.is_tight && r.informationally_complete)
    return "tight IC frame, a=b=" + fmt("%.4g", 0.5 * (r.bounds.a + r.bounds.b));
  if (r.is_povm && r.informationally_complete) return "IC-POVM, bounds " + bounds;
  if (r.informationally_complete) return "IC frame, bounds " + bounds;
  return "rank-deficient frame (gram rank " + std::to_string(r.gram_rank) + "), bounds " + bounds;
}

CommandResult failure(const std::string& message, int code = 1) {
  return CommandResult{code, std::nullopt, message};
}

}  // namespace

CommandResult cmd_frame_build(const FrameBuildOptions& opts) {
  try {
    Frame f = [&] {
      const int n = opts.n > 0 ? opts.n : opts.d * opts.d;
      if (opts.kind == "wootters") return wootters_frame(opts.d);
      if (opts.kind == "sic2") return sic_frame_qubit();
      if (opts.kind == "mub") return mub_frame(opts.d);
      if (opts.kind == "random-povm") return random_ic_povm(opts.d, n, opts.seed);
      if (opts.kind == "random") return random_frame(opts.d, n, opts.seed);
      throw std::invalid_argument("unknown frame kind: " + opts.kind);
    }();
    save_json(opts.out_path, frame_to_json(f));
    const FrameReport r = frame_report(f);
    return CommandResult{0, opts.out_path,
                         std::to_string(f.size()) + " elements, " + frame_summary(r)};
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

CommandResult cmd_frame_check(const std::string& frame_path,
                              const std::optional<std::string>& out_path, double tol) {
  try {
    const Frame f = load_frame(frame_path);
    const FrameReport r = frame_report(f, tol);
    const Json j{{"bounds", Json{{"a", r.bounds.a}, {"b", r.bounds.b}}},
                 {"informationally_complete", r.informationally_complete},
                 {"is_povm", r.is_povm},
                 {"is_tight", r.is_tight},
                 {"gram_rank", r.gram_rank}};
    if (out_path) save_json(*out_path, j);
    return CommandResult{0, out_path, frame_summary(r)};
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

CommandResult cmd_dual(const DualOptions& opts) {
  try {
    const std::string frame_bytes = read_file(opts.frame_path);
    const Frame f = load_frame(opts.frame_path);
    const std::string hash = fnv1a_hex(frame_bytes);

    DualFrame d;
    std::string extra;
    if (opts.mode == "canonical") {
      d = canonical_dual(f);
    } else if (opts.mode == "optimize") {
      const OptimizeResult r = optimize_dual_negativity(f, opts.iters, opts.step0, opts.seed);
      d = r.best;
      const std::string report_path = opts.out_path + ".report.json";
      save_json(report_path, Json{{"value", r.value},
                                  {"iters", opts.iters},
                                  {"seed", opts.seed},
                                  {"trace", r.trace}});
      extra = ", optimized objective " + fmt("%.6g", r.value) + " (report " + report_path + ")";
    } else {
      throw std::invalid_argument("unknown dual mode: " + opts.mode);
    }
    save_json(opts.out_path, dual_to_json(d, hash));

    double lambda_min = eig_hermitian(d.elements[0]).eigenvalues.front();
    for (int j = 1; j < d.size(); ++j)
      lambda_min = std::min(lambda_min, eig_hermitian(d.elements[j]).eigenvalues.front());
    return CommandResult{0, opts.out_path,
                         std::to_string(d.size()) + " dual elements, min eigenvalue " +
                             fmt("%.6g", lambda_min) + extra};
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

CommandResult cmd_certify(const std::string& frame_path, const std::string& dual_path,
                          const std::optional<std::string>& out_path) {
  try {
    const std::string frame_bytes = read_file(frame_path);
    const Frame f = load_frame(frame_path);
    std::string parent_hash;
    const DualFrame d = load_dual(dual_path, &parent_hash);
    const std::string hash = fnv1a_hex(frame_bytes);
    if (hash != parent_hash)
      return failure("hash mismatch: dual file was built from a different frame (expected " +
                     hash + ", found " + parent_hash + ")");

    const NegativityReport r = certify_negativity(f, d);
    const Json j = negativity_report_to_json(r);
    if (out_path) save_json(*out_path, j);
    return CommandResult{0, out_path,
                         std::string(to_string(r.verdict)) + ": frame lambda_min " +
                             fmt("%.6g", r.frame_lambda_min) + ", dual lambda_min " +
                             fmt("%.6g", r.dual_lambda_min)};
  } catch (const NoNegativityError& e) {
    return failure(e.what(), 2);
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

CommandResult cmd_rep(const RepOptions& opts) {
  try {
    auto values_line = [](const std::vector<double>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + fmt("%.10g", v[i]);
      return s + "]";
    };

    if (opts.mode == "state") {
      if (!opts.frame_path || !opts.state_path)
        throw std::invalid_argument("rep state needs --frame and --state");
      const Frame f = load_frame(*opts.frame_path);
      const QuasiProbState q = rep_state(f, load_operator(*opts.state_path));
      return CommandResult{0, std::nullopt,
                           "values " + values_line(q.values) + ", negativity " +
                               fmt("%.10g", negativity_state(q))};
    }
    if (opts.mode == "effect") {
      if (!opts.dual_path || !opts.effect_path)
        throw std::invalid_argument("rep effect needs --dual and --effect");
      const DualFrame d = load_dual(*opts.dual_path);
      const QuasiProbEffect s = rep_effect(d, load_operator(*opts.effect_path));
      return CommandResult{0, std::nullopt,
                           "values " + values_line(s.values) + ", negativity " +
                               fmt("%.10g", negativity_effect(s))};
    }
    if (opts.mode == "born") {
      if (!opts.frame_path || !opts.dual_path || !opts.state_path || !opts.effect_path)
        throw std::invalid_argument("rep born needs --frame, --dual, --state and --effect");
      const Frame f = load_frame(*opts.frame_path);
      const DualFrame d = load_dual(*opts.dual_path);
      const BornCheck b =
          born_check(f, d, load_operator(*opts.state_path), load_operator(*opts.effect_path));
      return CommandResult{0, std::nullopt,
                           "Tr(rho E) = " + fmt("%.10g", b.lhs) + ", classical sum = " +
                               fmt("%.10g", b.rhs) + ", residual " + fmt("%.3g", b.residual)};
    }
    throw std::invalid_argument("unknown rep mode: " + opts.mode);
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

namespace {

PhaseGrid parse_grid_spec(const std::string& spec) {
  std::vector<double> parts;
  std::string cur;
  for (char c : spec + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("bad --grid spec: " + spec);
      parts.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (parts.size() != 6)
    throw std::invalid_argument("--grid needs qmin,qmax,pmin,pmax,nq,np");
  return make_phase_grid(parts[0], parts[1], parts[2], parts[3],
                         static_cast<int>(parts[4]), static_cast<int>(parts[5]));
}

}  // namespace

CommandResult cmd_wigner(const WignerOptions& opts) {
  try {
    const FockState rho = load_fock_state(opts.state_path);
    std::string note;
    PhaseGrid grid;
    if (opts.grid_spec) {
      grid = parse_grid_spec(*opts.grid_spec);
    } else {
      grid = PhaseGrid{};  // [-6,6]^2, 201x201
      note = " (default grid [-6,6]x[-6,6], 201x201)";
    }
    const WignerGrid w = wigner_transform(rho, grid);
    save_json(opts.out_path, wigner_grid_to_json(w));
    if (opts.csv_path) write_file(*opts.csv_path, wigner_grid_to_csv(w));

    // Value at the node nearest the origin, plus the surface minimum.
    int i0 = 0, k0 = 0;
    for (int i = 1; i < grid.n_q; ++i)
      if (std::abs(grid.q(i)) < std::abs(grid.q(i0))) i0 = i;
    for (int k = 1; k < grid.n_p; ++k)
      if (std::abs(grid.p(k)) < std::abs(grid.p(k0))) k0 = k;
    double w_min = w.values[0];
    for (double v : w.values) w_min = std::min(w_min, v);

    std::string summary = "W(" + fmt("%.6g", grid.q(i0)) + "," + fmt("%.6g", grid.p(k0)) +
                          ")=" + fmt("%.6f", w.at(i0, k0)) + ", min " + fmt("%.6f", w_min) + note;

    if (opts.marginals_path) {
      const Marginals m = marginals(w);
      save_json(*opts.marginals_path,
                Json{{"q_density", m.q_density}, {"p_density", m.p_density}});
      summary += ", marginals written";
    }
    if (opts.with_reconstruct) {
      const Matrix rec = reconstruct_from_wigner(w, rho.cutoff);
      summary += ", reconstruction residual " + fmt("%.3g", max_abs_diff(rec, rho.matrix));
    }
    return CommandResult{0, opts.out_path, summary};
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

}  // namespace qpr::cli

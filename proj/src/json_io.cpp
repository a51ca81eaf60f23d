#include "qpr/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qpr {

namespace {

Json matrix_part(const Matrix& m, bool imag) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_parts(const Json& re, const Json& im, int dim) {
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != dim ||
      static_cast<int>(im.size()) != dim)
    throw std::runtime_error("operator JSON: re/im must be dim x dim arrays");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& rrow = re.at(i);
    const Json& irow = im.at(i);
    if (static_cast<int>(rrow.size()) != dim || static_cast<int>(irow.size()) != dim)
      throw std::runtime_error("operator JSON: ragged re/im rows");
    for (int j = 0; j < dim; ++j)
      m(i, j) = Complex(rrow.at(j).get<double>(), irow.at(j).get<double>());
  }
  return m;
}

}  // namespace

Json operator_to_json(const HermitianOperator& a) {
  return Json{{"dim", a.dim()}, {"re", matrix_part(a.matrix(), false)},
              {"im", matrix_part(a.matrix(), true)}};
}

HermitianOperator operator_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::runtime_error("operator JSON: dim must be >= 1");
  Matrix m = matrix_from_parts(j.at("re"), j.at("im"), dim);
  const double defect = hermiticity_defect(m);
  if (defect > kHermTol)
    throw std::runtime_error("operator JSON: matrix is not Hermitian (max deviation " +
                             std::to_string(defect) + ")");
  return HermitianOperator(std::move(m));
}

Json frame_to_json(const Frame& f) {
  Json elements = Json::array();
  for (const auto& e : f.elements) elements.push_back(operator_to_json(e));
  return Json{{"dim", f.dim}, {"labels", f.labels}, {"elements", std::move(elements)}};
}

namespace {

struct FamilyParts {
  int dim = 0;
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;
};

FamilyParts family_from_json(const Json& j, const char* what) {
  FamilyParts out;
  out.dim = j.at("dim").get<int>();
  out.labels = j.at("labels").get<std::vector<std::string>>();
  for (const Json& e : j.at("elements")) {
    out.elements.push_back(operator_from_json(e));
    if (out.elements.back().dim() != out.dim)
      throw std::runtime_error(std::string(what) + " JSON: element dimension mismatch");
  }
  if (out.labels.size() != out.elements.size())
    throw std::runtime_error(std::string(what) + " JSON: label/element count mismatch");
  return out;
}

}  // namespace

Frame frame_from_json(const Json& j) {
  FamilyParts parts = family_from_json(j, "frame");
  Matrix sum(parts.dim, parts.dim);
  for (const auto& e : parts.elements) sum = sum + e.matrix();
  const double defect = max_abs_diff(sum, Matrix::identity(parts.dim));
  if (defect > 1e-8)
    throw std::runtime_error("frame JSON: elements do not sum to the identity (max deviation " +
                             std::to_string(defect) + "); not a valid frame file");
  return make_frame(parts.dim, std::move(parts.elements), std::move(parts.labels));
}

Json dual_to_json(const DualFrame& d, const std::string& parent_frame_hash) {
  Json elements = Json::array();
  for (const auto& e : d.elements) elements.push_back(operator_to_json(e));
  return Json{{"dim", d.dim},
              {"labels", d.labels},
              {"elements", std::move(elements)},
              {"parent_frame_hash", parent_frame_hash}};
}

DualFrame dual_from_json(const Json& j, std::string* parent_frame_hash) {
  FamilyParts parts = family_from_json(j, "dual");
  if (parent_frame_hash) *parent_frame_hash = j.at("parent_frame_hash").get<std::string>();
  DualFrame d;
  d.dim = parts.dim;
  d.elements = std::move(parts.elements);
  d.labels = std::move(parts.labels);
  return d;
}

Json negativity_report_to_json(const NegativityReport& r) {
  Json witnesses = Json::object();
  if (r.state_witness) {
    witnesses["state"] = Json{{"index", r.state_witness->index},
                              {"operator", operator_to_json(r.state_witness->state)}};
  }
  if (r.effect_witness) {
    witnesses["effect"] = Json{{"index", r.effect_witness->index},
                               {"operator", operator_to_json(r.effect_witness->effect)},
                               {"value", r.effect_witness->value}};
  }
  return Json{{"frame_lambda_min", r.frame_lambda_min},
              {"dual_lambda_min", r.dual_lambda_min},
              {"verdict", to_string(r.verdict)},
              {"witnesses", std::move(witnesses)}};
}

Json wigner_grid_to_json(const WignerGrid& w) {
  return Json{{"grid",
               Json{{"q_min", w.grid.q_min},
                    {"q_max", w.grid.q_max},
                    {"p_min", w.grid.p_min},
                    {"p_max", w.grid.p_max},
                    {"n_q", w.grid.n_q},
                    {"n_p", w.grid.n_p}}},
              {"values", w.values}};
}

WignerGrid wigner_grid_from_json(const Json& j) {
  const Json& g = j.at("grid");
  WignerGrid w;
  w.grid = make_phase_grid(g.at("q_min").get<double>(), g.at("q_max").get<double>(),
                           g.at("p_min").get<double>(), g.at("p_max").get<double>(),
                           g.at("n_q").get<int>(), g.at("n_p").get<int>());
  w.values = j.at("values").get<std::vector<double>>();
  if (w.values.size() != static_cast<std::size_t>(w.grid.n_q) * w.grid.n_p)
    throw std::runtime_error("wigner JSON: value count does not match grid");
  return w;
}

std::string wigner_grid_to_csv(const WignerGrid& w) {
  std::string out = "q,p,W\n";
  char buf[96];
  for (int i = 0; i < w.grid.n_q; ++i)
    for (int k = 0; k < w.grid.n_p; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", w.grid.q(i), w.grid.p(k), w.at(i, k));
      out += buf;
    }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

Json parse_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace

HermitianOperator load_operator(const std::string& path) {
  try {
    return operator_from_json(parse_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad operator file " + path + ": " + e.what());
  }
}

Frame load_frame(const std::string& path) {
  try {
    return frame_from_json(parse_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad frame file " + path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("bad frame file " + path + ": " + e.what());
  }
}

DualFrame load_dual(const std::string& path, std::string* parent_frame_hash) {
  try {
    return dual_from_json(parse_file(path), parent_frame_hash);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad dual file " + path + ": " + e.what());
  }
}

FockState load_fock_state(const std::string& path) {
  const HermitianOperator op = load_operator(path);
  return make_fock_state(op.matrix());
}

void save_json(const std::string& path, const Json& j) { write_file(path, j.dump(2) + "\n"); }

}  // namespace qpr

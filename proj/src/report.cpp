#include "cherednik/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cherednik {
namespace {

Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(r.str());
  return a;
}

std::vector<Rat> rats_from(const Json& j) {
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(Rat::parse(e.get<std::string>()));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json vec_json(const Vec2& v, int rank) {
  Json a = Json::array();
  for (int i = 0; i < rank; ++i) a.push_back(v[i].str());
  return a;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw parse_error(std::string("report lacks field '") + name + "'");
  return j.at(name);
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S, class Parse>
Matrix<S> matrix_from(const Json& j, std::size_t n, Parse parse) {
  if (j.size() != n) throw parse_error("gram matrix has the wrong number of rows");
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (j[i].size() != n) throw parse_error("gram matrix row has the wrong length");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = parse(j[i][c].template get<std::string>());
  }
  return m;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Json to_json(const ClassifyResult& r) {
  Json j;
  j["type"] = type_label(r.type);
  j["chi"] = r.chi;
  j["k"] = rats_json(r.k);
  j["finite"] = r.finite;
  j["m"] = optional_json(r.m);
  j["m0"] = optional_json(r.m0);
  j["b_chi"] = r.b_chi.str();
  j["graded_dims"] = r.graded_dims;
  j["dim"] = optional_json(r.dim);
  j["criterion"] = r.criterion;
  return j;
}

ClassifyResult classify_from_json(const Json& j) {
  ClassifyResult r;
  r.type = parse_root_type(field(j, "type").get<std::string>());
  r.chi = field(j, "chi").get<std::string>();
  r.k = rats_from(field(j, "k"));
  r.finite = field(j, "finite").get<bool>();
  r.m = optional_from<long>(field(j, "m"));
  r.m0 = optional_from<long>(field(j, "m0"));
  r.b_chi = Rat::parse(field(j, "b_chi").get<std::string>());
  r.graded_dims = field(j, "graded_dims").get<std::vector<std::size_t>>();
  r.dim = optional_from<std::size_t>(field(j, "dim"));
  r.criterion = field(j, "criterion").get<std::string>();
  return r;
}

Json to_json(const GramReport& r) {
  Json j;
  j["type"] = type_label(r.type);
  j["chi"] = r.chi;
  j["mode"] = r.symbolic ? "symbolic" : "evaluated";
  j["k"] = rats_json(r.k);
  j["degree"] = r.degree;
  j["size"] = r.size;
  j["rank"] = r.rank;
  j["nullity"] = r.nullity;
  j["matrix"] = r.symbolic ? matrix_json(r.symbolic_matrix) : matrix_json(r.evaluated);
  return j;
}

GramReport gram_from_json(const Json& j) {
  GramReport r;
  r.type = parse_root_type(field(j, "type").get<std::string>());
  r.chi = field(j, "chi").get<std::string>();
  const std::string mode = field(j, "mode").get<std::string>();
  if (mode != "symbolic" && mode != "evaluated") throw parse_error("unknown gram mode " + mode);
  r.symbolic = mode == "symbolic";
  r.k = rats_from(field(j, "k"));
  r.degree = field(j, "degree").get<int>();
  r.size = field(j, "size").get<std::size_t>();
  r.rank = field(j, "rank").get<std::size_t>();
  r.nullity = field(j, "nullity").get<std::size_t>();
  const Json& m = field(j, "matrix");
  if (r.symbolic)
    r.symbolic_matrix = matrix_from<ParamPoly>(
        m, r.size, [](const std::string& s) { return ParamPoly::parse(s); });
  else
    r.evaluated =
        matrix_from<QuadExt>(m, r.size, [](const std::string& s) { return QuadExt::parse(s); });
  return r;
}

Json to_json(const ConjectureReport& r) {
  Json j;
  j["max_q"] = r.max_q;
  j["verified_up_to"] = r.verified_up_to;
  j["first_failure"] = optional_json(r.first_failure);
  return j;
}

ConjectureReport conjecture_from_json(const Json& j) {
  ConjectureReport r;
  r.max_q = field(j, "max_q").get<int>();
  r.verified_up_to = field(j, "verified_up_to").get<int>();
  r.first_failure = optional_from<int>(field(j, "first_failure"));
  return r;
}

Json info_json(RootType type) {
  const RootSystem& rs = root_system(type);
  Json j;
  j["type"] = type_label(type);
  j["rank"] = rs.rank;
  j["order"] = rs.order();
  j["degrees"] = rs.degrees;
  Json roots = Json::array();
  for (const auto& a : rs.positive) {
    Json e;
    e["root"] = vec_json(a.root, rs.rank);
    e["coroot"] = vec_json(a.coroot, rs.rank);
    e["orbit"] = a.orbit;
    roots.push_back(std::move(e));
  }
  j["positive_roots"] = std::move(roots);
  Json inv = Json::array();
  for (const QPoly& p : rs.invariants) inv.push_back(p.str());
  j["invariants"] = std::move(inv);
  j["hbar"] = hbar_formula(type).str();

  const auto classes = conjugacy_classes(rs);
  Json cls = Json::array();
  for (const auto& c : classes) cls.push_back({{"name", c.name}, {"size", c.size}});
  j["classes"] = std::move(cls);
  Json reps = Json::array();
  for (const Irrep& chi : irreps(type)) {
    Json values = Json::array();
    for (const auto& c : classes) values.push_back(chi.character[c.representative].str());
    reps.push_back({{"label", chi.label}, {"dim", chi.dim}, {"character", std::move(values)}});
  }
  j["irreps"] = std::move(reps);
  return j;
}

std::string info_table(RootType type) {
  const RootSystem& rs = root_system(type);
  const auto classes = conjugacy_classes(rs);
  const auto& reps = irreps(type);
  std::ostringstream os;
  os << "type " << type_label(type) << "  rank " << rs.rank << "  |W| " << rs.order()
     << "  |R+| " << rs.positive.size() << "  hbar = " << hbar_formula(type).str() << "\n";
  os << "invariants:";
  for (const QPoly& p : rs.invariants) os << "  " << p.str();
  os << "\n\n";

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"class"};
  std::vector<std::string> sizes{"size"};
  for (const auto& c : classes) {
    head.push_back(c.name);
    sizes.push_back(std::to_string(c.size));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (const Irrep& chi : reps) {
    std::vector<std::string> row{chi.label};
    for (const auto& c : classes) row.push_back(chi.character[c.representative].str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0)
        os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      else
        os << "  " << std::right << std::setw(static_cast<int>(width[i])) << row[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string csv_header() { return "type,k1,k2,chi,finite,m,dim"; }

std::string csv_row(const ClassifyResult& r) {
  const std::string k1 = r.k.empty() ? "" : r.k[0].str();
  const std::string k2 = r.k.size() > 1 ? r.k[1].str() : k1;
  std::ostringstream os;
  os << type_label(r.type) << "," << k1 << "," << k2 << "," << r.chi << ","
     << (r.finite ? "true" : "false") << "," << (r.m ? std::to_string(*r.m) : "") << ","
     << (r.dim ? std::to_string(*r.dim) : "");
  return os.str();
}

std::string classify_table(const ClassifyResult& r) {
  std::ostringstream os;
  std::string ks;
  for (std::size_t i = 0; i < r.k.size(); ++i) ks += (i ? ", " : "") + r.k[i].str();
  os << "type        " << type_label(r.type) << "\n"
     << "chi         " << r.chi << "\n"
     << "k           " << ks << "\n"
     << "b_chi       " << r.b_chi.str() << "\n"
     << "finite      " << (r.finite ? "yes" : "no") << "\n";
  if (r.finite) {
    os << "m           " << *r.m << "\n"
       << "graded_dims " << join(r.graded_dims) << "\n"
       << "dim         " << *r.dim << "\n";
  }
  os << "criterion   " << r.criterion << "\n";
  return os.str();
}

std::string gram_table(const GramReport& r) {
  std::ostringstream os;
  os << "type " << type_label(r.type) << "  chi " << r.chi << "  degree " << r.degree << "  "
     << (r.symbolic ? "symbolic" : "evaluated") << "  size " << r.size << "  rank " << r.rank
     << "  nullity " << r.nullity << "\n";
  const Json m = to_json(r)["matrix"];
  std::size_t w = 1;
  for (const auto& row : m)
    for (const auto& e : row) w = std::max(w, e.get<std::string>().size());
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(w)) << row[c].get<std::string>();
    os << "\n";
  }
  return os.str();
}

}  // namespace cherednik

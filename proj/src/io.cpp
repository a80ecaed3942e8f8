#include "mpqp/io.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "mpqp/errors.hpp"

namespace mpqp {

using nlohmann::json;

namespace {

const json& field(const json& doc, const std::string& name) {
  if (!doc.is_object()) throw ParseError("document is not an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(name + ": missing field");
  return *it;
}

int read_dim(const json& doc, const std::string& name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(name + ": expected a nonnegative integer");
  }
  return static_cast<int>(v.get<long long>());
}

double read_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ParseError(name + ": non-numeric entry");
  return v.get<double>();
}

Vector read_vector(const json& doc, const std::string& name, Eigen::Index size) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw ParseError(name + ": expected an array");
  if (static_cast<Eigen::Index>(v.size()) != size) {
    throw ValidationError(name + ": " + std::to_string(v.size()) +
                          " entries, expected " + std::to_string(size));
  }
  Vector out(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    out(i) = read_number(v[static_cast<std::size_t>(i)], name);
  }
  return out;
}

// rows < 0 accepts any row count.
Matrix read_matrix(const json& doc, const std::string& name, Eigen::Index rows,
                   Eigen::Index cols) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw ParseError(name + ": expected an array of rows");
  const auto have = static_cast<Eigen::Index>(v.size());
  if (rows >= 0 && have != rows) {
    throw ValidationError(name + ": " + std::to_string(have) + " rows, expected " +
                          std::to_string(rows));
  }
  Matrix out(have, cols);
  for (Eigen::Index i = 0; i < have; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw ParseError(name + ": row " + std::to_string(i) + " is not an array");
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError(name + ": row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(cols));
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = read_number(row[static_cast<std::size_t>(j)], name);
    }
  }
  return out;
}

json write_vector(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json write_matrix(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json write_polyhedron(const Polyhedron& P) {
  return json{{"G", write_matrix(P.G())}, {"g", write_vector(P.g())}};
}

Polyhedron read_polyhedron(const json& doc, const std::string& name, Eigen::Index p) {
  const json& v = field(doc, name);
  const Vector g = read_vector(v, "g", static_cast<Eigen::Index>(field(v, "g").size()));
  return Polyhedron(read_matrix(v, "G", g.size(), p), g);
}

json parse_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << to_text(doc);
  if (!out) throw ValidationError("write to '" + path + "' failed");
}

json write_counters(const ExplorationCounters& c) {
  return json{{"popped", c.popped},
              {"licq_fail", c.licq_fail},
              {"feas_calls", c.feas_calls},
              {"nonempty", c.nonempty},
              {"empty", c.empty},
              {"lower_dimensional", c.lower_dimensional},
              {"inconclusive", c.inconclusive},
              {"pushed_supersets", c.pushed_supersets},
              {"pushed_subsets", c.pushed_subsets},
              {"explored", c.explored}};
}

ExplorationCounters read_counters(const json& doc) {
  auto get = [&](const char* name) {
    return static_cast<std::size_t>(read_dim(doc, name));
  };
  ExplorationCounters c;
  c.popped = get("popped");
  c.licq_fail = get("licq_fail");
  c.feas_calls = get("feas_calls");
  c.nonempty = get("nonempty");
  c.empty = get("empty");
  c.lower_dimensional = get("lower_dimensional");
  c.inconclusive = get("inconclusive");
  c.pushed_supersets = get("pushed_supersets");
  c.pushed_subsets = get("pushed_subsets");
  c.explored = get("explored");
  return c;
}

}  // namespace

std::string to_text(const json& doc) { return doc.dump() + "\n"; }

MpQP problem_from_json(const json& doc) {
  const int n = read_dim(doc, "n");
  const int m = read_dim(doc, "m");
  const int p = read_dim(doc, "p");
  if (n < 1) throw ValidationError("n: must be at least 1");
  if (p < 1) throw ValidationError("p: must be at least 1");

  Matrix H = read_matrix(doc, "H", n, n);
  Matrix f_coeff = read_matrix(doc, "f_coeff", n, p);
  Vector f_offset = read_vector(doc, "f_offset", n);
  Matrix A = read_matrix(doc, "A", m, n);
  Matrix b_coeff = read_matrix(doc, "b_coeff", m, p);
  Vector b_offset = read_vector(doc, "b_offset", m);
  const auto q = static_cast<Eigen::Index>(field(doc, "theta0_g").size());
  Vector theta0_g = read_vector(doc, "theta0_g", q);
  Matrix theta0_G = read_matrix(doc, "theta0_G", q, p);

  return MpQP(std::move(H), AffineMap(std::move(f_coeff), std::move(f_offset)),
              std::move(A), AffineMap(std::move(b_coeff), std::move(b_offset)),
              Polyhedron(std::move(theta0_G), std::move(theta0_g)));
}

json problem_to_json(const MpQP& qp) {
  return json{{"n", qp.n()},
              {"m", qp.m()},
              {"p", qp.p()},
              {"H", write_matrix(qp.H())},
              {"f_coeff", write_matrix(qp.f().coeff())},
              {"f_offset", write_vector(qp.f().offset())},
              {"A", write_matrix(qp.A())},
              {"b_coeff", write_matrix(qp.b().coeff())},
              {"b_offset", write_vector(qp.b().offset())},
              {"theta0_G", write_matrix(qp.theta0().G())},
              {"theta0_g", write_vector(qp.theta0().g())}};
}

MpQP load_problem(const std::string& path) {
  return problem_from_json(parse_text(path));
}

void save_problem(const MpQP& qp, const std::string& path) {
  write_text(problem_to_json(qp), path);
}

std::string problem_digest(const MpQP& qp) {
  const std::string text = to_text(problem_to_json(qp));
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw ValidationError("problem digest failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

json solution_to_json(const ExplicitSolution& sol) {
  json records = json::array();
  for (const auto& r : sol.records) {
    records.push_back(json{{"active_set", r.active_set.one_based()},
                           {"region", write_polyhedron(r.region)},
                           {"x_coeff", write_matrix(r.x_map.coeff())},
                           {"x_offset", write_vector(r.x_map.offset())},
                           {"lambda_coeff", write_matrix(r.lambda_map.coeff())},
                           {"lambda_offset", write_vector(r.lambda_map.offset())}});
  }
  return json{
      {"problem_hash", sol.problem_hash},
      {"n", sol.n},
      {"m", sol.m},
      {"p", sol.p},
      {"theta0", write_polyhedron(sol.theta0)},
      {"records", std::move(records)},
      {"recovery",
       json{{"R", write_matrix(sol.recovery.R)},
            {"f_coeff", write_matrix(sol.recovery.f.coeff())},
            {"f_offset", write_vector(sol.recovery.f.offset())}}},
      {"stats", write_counters(sol.stats)},
      {"tolerances",
       json{{"eps_feas", sol.tolerances.eps_feas}, {"rank_tol", sol.tolerances.rank_tol}}}};
}

ExplicitSolution solution_from_json(const json& doc) {
  ExplicitSolution sol;
  const json& hash = field(doc, "problem_hash");
  if (!hash.is_string()) throw ParseError("problem_hash: expected a string");
  sol.problem_hash = hash.get<std::string>();
  sol.n = read_dim(doc, "n");
  sol.m = read_dim(doc, "m");
  sol.p = read_dim(doc, "p");
  sol.theta0 = read_polyhedron(doc, "theta0", sol.p);

  const json& rec = field(doc, "recovery");
  sol.recovery.R = read_matrix(rec, "R", sol.n, sol.n);
  sol.recovery.f = AffineMap(read_matrix(rec, "f_coeff", sol.n, sol.p),
                             read_vector(rec, "f_offset", sol.n));
  sol.stats = read_counters(field(doc, "stats"));
  const json& tol = field(doc, "tolerances");
  sol.tolerances.eps_feas = read_number(field(tol, "eps_feas"), "eps_feas");
  sol.tolerances.rank_tol = read_number(field(tol, "rank_tol"), "rank_tol");

  const json& records = field(doc, "records");
  if (!records.is_array()) throw ParseError("records: expected an array");
  for (const json& r : records) {
    const json& idx = field(r, "active_set");
    if (!idx.is_array()) throw ParseError("active_set: expected an array");
    std::vector<int> one_based;
    for (const json& i : idx) {
      if (!i.is_number_integer()) throw ParseError("active_set: non-integer index");
      one_based.push_back(i.get<int>());
    }
    SolutionRecord out;
    out.active_set = ActiveSet::from_one_based(one_based, sol.m);
    const auto k = static_cast<Eigen::Index>(out.active_set.size());
    out.region = read_polyhedron(r, "region", sol.p);
    out.x_map = AffineMap(read_matrix(r, "x_coeff", sol.n, sol.p),
                          read_vector(r, "x_offset", sol.n));
    out.lambda_map = AffineMap(read_matrix(r, "lambda_coeff", k, sol.p),
                               read_vector(r, "lambda_offset", k));
    sol.records.push_back(std::move(out));
  }
  return sol;
}

ExplicitSolution load_solution(const std::string& path) {
  return solution_from_json(parse_text(path));
}

void save_solution(const ExplicitSolution& sol, const std::string& path) {
  write_text(solution_to_json(sol), path);
}

}  // namespace mpqp

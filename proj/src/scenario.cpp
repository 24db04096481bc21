#include "qlogic/scenario.hpp"

#include <fstream>
#include <sstream>

#include "qlogic/matrix.hpp"

namespace qlogic {

namespace {

using json = nlohmann::json;

std::string child(const std::string& path, const std::string& key) {
  // JSON pointer escaping: ~ -> ~0, / -> ~1.
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return path + "/" + escaped;
}
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}
[[noreturn]] void invalid(const std::string& object, const std::string& what) {
  throw Error(ErrorKind::ValidationError, object + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, "missing key '" + key + "'");
  return *it;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  return j;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) parse_fail(child(path, key), "unknown key");
  }
}

std::int64_t read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

cplx read_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail(path, "expected a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector read_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty array of [re, im] entries");
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = read_complex(j[i], child(path, i));
  return v;
}

CMatrix read_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].empty()) parse_fail(child(path, r), "expected a nonempty row");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) parse_fail(child(path, r), "row length differs from the first row");
  }
  CMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = read_complex(j[r][c], child(child(path, r), c));
  return m;
}

CMatrix read_square(const json& j, const std::string& path, Index dim, const std::string& object) {
  const CMatrix m = read_matrix(j, path);
  if (m.rows() != m.cols()) invalid(object, "matrix is not square");
  if (m.rows() != dim) {
    invalid(object, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected dimension " +
                        std::to_string(dim));
  }
  return m;
}

Observable read_observable(const json& j, const std::string& path, const std::string& name, Index dim,
                           const std::string& object, const Tolerance& tol) {
  require_object(j, path);
  reject_unknown_keys(j, {"matrix"}, path);
  const CMatrix m = read_square(require(j, "matrix", path), child(path, "matrix"), dim, object);
  if (!is_hermitian(m, tol)) invalid(object, "matrix is not Hermitian");
  return Observable::decompose(name, m, tol);
}

DensityState read_state(const json& j, const std::string& path, Index dim, const std::string& object,
                        const Tolerance& tol) {
  require_object(j, path);
  reject_unknown_keys(j, {"matrix", "vector"}, path);
  const bool has_matrix = j.contains("matrix");
  const bool has_vector = j.contains("vector");
  if (has_matrix == has_vector) parse_fail(path, "expected exactly one of 'matrix' or 'vector'");
  try {
    if (has_vector) {
      const CVector v = read_vector(j["vector"], child(path, "vector"));
      if (v.size() != dim) {
        invalid(object, "vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
      }
      return DensityState::pure(v, tol);
    }
    const CMatrix m = read_square(j["matrix"], child(path, "matrix"), dim, object);
    if (!is_hermitian(m, tol)) invalid(object, "matrix is not Hermitian");
    return DensityState::from_matrix(m, tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    invalid(object, e.what());
  }
}

MeasuringProcess read_process(const json& j, const std::string& path, Index dim, const std::string& object,
                              const Tolerance& tol) {
  require_object(j, path);
  reject_unknown_keys(j, {"dimK", "sigma", "U", "M"}, path);
  const std::int64_t dim_k = read_int(require(j, "dimK", path), child(path, "dimK"));
  if (dim_k < 1) invalid(object, "dimK must be positive");
  MeasuringProcess mp;
  mp.dim_h = dim;
  const Index k = static_cast<Index>(dim_k);
  mp.sigma = read_state(require(j, "sigma", path), child(path, "sigma"), k, object + " sigma", tol);
  mp.u = read_square(require(j, "U", path), child(path, "U"), dim * k, object + " U");
  const CMatrix meter = read_square(require(j, "M", path), child(path, "M"), k, object + " M");
  if (!is_hermitian(meter, tol)) invalid(object + " M", "matrix is not Hermitian");
  mp.meter = Observable::decompose("M", meter, tol);
  try {
    mp.validate(tol);
  } catch (const Error& e) {
    invalid(object, e.what());
  }
  return mp;
}

template <typename T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) {
  const auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::UnknownName, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

const Observable& Scenario::observable(const std::string& name) const {
  if (!observables.has(name)) throw Error(ErrorKind::UnknownName, "unknown observable '" + name + "'");
  return observables.get(name);
}
const DensityState& Scenario::state(const std::string& name) const { return lookup(states, name, "state"); }
const Prop& Scenario::proposition(const std::string& name) const {
  return *lookup(propositions, name, "proposition");
}
const MeasuringProcess& Scenario::process(const std::string& name) const {
  return lookup(processes, name, "process");
}

Scenario parse_scenario(const json& doc, const Tolerance& tol) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"dimension", "observables", "states", "propositions", "processes", "seed"}, "");
  Scenario s;
  const std::int64_t dim = read_int(require(doc, "dimension", ""), "/dimension");
  if (dim < 1) invalid("dimension", "must be positive");
  s.dimension = static_cast<Index>(dim);
  s.observables = ObservableRegistry(s.dimension);

  if (doc.contains("observables")) {
    const json& obs = require_object(doc["observables"], "/observables");
    for (const auto& [name, value] : obs.items()) {
      const std::string path = child("/observables", name);
      s.observables.add(read_observable(value, path, name, s.dimension, "observable '" + name + "'", tol));
    }
  }
  if (doc.contains("states")) {
    const json& states = require_object(doc["states"], "/states");
    for (const auto& [name, value] : states.items()) {
      s.states.emplace(name, read_state(value, child("/states", name), s.dimension, "state '" + name + "'", tol));
    }
  }
  if (doc.contains("propositions")) {
    const json& props = require_object(doc["propositions"], "/propositions");
    for (const auto& [name, value] : props.items()) {
      const std::string path = child("/propositions", name);
      if (!value.is_string()) parse_fail(path, "expected a proposition string");
      const std::string text = value.get<std::string>();
      PropPtr p;
      try {
        p = parse_proposition(text);
      } catch (const SyntaxError& e) {
        parse_fail(path, "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": " +
                             e.what());
      }
      for (const std::string& o : mentioned_observables(*p)) {
        if (!s.observables.has(o)) invalid("proposition '" + name + "'", "unknown observable '" + o + "'");
      }
      s.propositions.emplace(name, std::move(p));
      s.proposition_text.emplace(name, text);
    }
  }
  if (doc.contains("processes")) {
    const json& procs = require_object(doc["processes"], "/processes");
    for (const auto& [name, value] : procs.items()) {
      s.processes.emplace(name, read_process(value, child("/processes", name), s.dimension,
                                             "process '" + name + "'", tol));
    }
  }
  if (doc.contains("seed")) {
    const std::int64_t seed = read_int(doc["seed"], "/seed");
    if (seed < 0) invalid("seed", "must be nonnegative");
    s.seed = static_cast<std::uint64_t>(seed);
  }
  return s;
}

Scenario parse_scenario_text(const std::string& text, const Tolerance& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("/: invalid JSON at byte ") + std::to_string(e.byte) + ": " +
                                           e.what());
  }
  return parse_scenario(doc, tol);
}

Scenario load_scenario(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), tol);
}

}  // namespace qlogic

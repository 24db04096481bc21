#include "qlogic/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qlogic {

Clause& Report::add(std::string name, bool passed, double residual, std::string note) {
  clauses.push_back(Clause{std::move(name), passed, residual, std::move(note)});
  return clauses.back();
}

bool Report::all_passed() const {
  for (const Clause& c : clauses)
    if (!c.passed) return false;
  return true;
}

bool Report::all_failed() const {
  for (const Clause& c : clauses)
    if (c.passed) return false;
  return true;
}

bool Report::coherent() const { return all_passed() || all_failed(); }

bool Report::verdict() const { return !clauses.empty() && clauses.front().passed; }

const Clause* Report::find(const std::string& name) const {
  for (const Clause& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const Clause& c : clauses) {
    nlohmann::ordered_json one;
    one["name"] = c.name;
    one["passed"] = c.passed;
    one["residual"] = round_sig(c.residual);
    if (!c.note.empty()) one["note"] = c.note;
    cs.push_back(std::move(one));
  }
  j["clauses"] = std::move(cs);
  j["coherent"] = coherent();
  j["all_passed"] = all_passed();
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << title << '\n';
  for (const Clause& c : clauses) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", c.residual);
    os << "  [" << (c.passed ? "true " : "false") << "] " << c.name << "  residual " << buf;
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
  }
  for (const std::string& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

InconsistentBattery::InconsistentBattery(Report report)
    : Error(ErrorKind::InconsistentBattery, "inconsistent battery: " + report.title + "\n" + report.to_text()),
      report_(std::move(report)) {}

double round_sig(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

}  // namespace qlogic

#include "surfsing/report.hpp"

#include <algorithm>
#include <sstream>

namespace surfsing {

Section& Report::add(std::string title) {
  sections.push_back(Section{std::move(title), {}, std::nullopt, std::nullopt, {}, {}, {}});
  return sections.back();
}

Section& Report::add_check(std::string title, bool ok) {
  Section& s = add(std::move(title));
  s.passed = ok;
  if (!ok) exit_status = kExitCheckFailed;
  return s;
}

namespace {

void render_table(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.headers.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(t.headers);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      text += row[i];
      if (i + 1 < row.size()) text += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "  " << text << '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : sections) {
    if (!first) out << '\n';
    first = false;
    out << "== " << s.title << " ==";
    if (s.passed) out << (*s.passed ? " PASS" : " FAIL");
    out << '\n';
    if (s.table) render_table(out, *s.table);
    for (const auto& [k, v] : s.fields) out << k << ": " << v << '\n';
    for (const auto& d : s.diffs) out << "  mismatch: " << d << '\n';
    for (const auto& n : s.notes) out << "  note: " << n << '\n';
    out << s.verbatim;
  }
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["exit_status"] = exit_status;
  auto& arr = j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    nlohmann::ordered_json js;
    js["title"] = s.title;
    if (s.passed) js["passed"] = *s.passed;
    if (s.table) {
      js["table"]["headers"] = s.table->headers;
      js["table"]["rows"] = s.table->rows;
    }
    if (!s.fields.empty()) {
      nlohmann::ordered_json fields = nlohmann::ordered_json::object();
      for (const auto& [k, v] : s.fields) fields[k] = v;
      js["fields"] = std::move(fields);
    }
    if (!s.diffs.empty()) js["mismatches"] = s.diffs;
    if (!s.notes.empty()) js["notes"] = s.notes;
    if (!s.verbatim.empty()) js["text"] = s.verbatim;
    arr.push_back(std::move(js));
  }
  return j;
}

}  // namespace surfsing

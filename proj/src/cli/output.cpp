#include <charconv>
#include <cmath>

#include "ekt/cli.hpp"

namespace ekt::cli {

namespace {

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return number(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return quoted(v);
      },
      c);
}

void csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string render_csv(const Output& o) {
  std::string out;
  std::vector<std::string> head;
  for (const std::string& c : o.columns) head.push_back(quoted(c));
  csv_line(out, head);
  for (const auto* block : {&o.rows, &o.csv_trailer})
    for (const auto& row : *block) {
      std::vector<std::string> cells;
      for (const Cell& c : row) cells.push_back(csv_cell(c));
      csv_line(out, cells);
    }
  return out;
}

std::string render_json(const Output& o) {
  nlohmann::ordered_json doc = o.doc;
  doc["columns"] = o.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : o.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < o.columns.size(); ++i)
      std::visit([&](const auto& v) { r[o.columns[i]] = v; }, row[i]);
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace ekt::cli

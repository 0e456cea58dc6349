#include "vecseq/io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace vecseq {

namespace {

Big parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty coordinate");
  for (char c : s)
    if (c < '0' || c > '9')
      throw ParseError("coordinate is not an unsigned decimal: '" + s + "'");
  return Big(s);
}

}  // namespace

void write_vector(std::ostream& os, const Vec& v, Format fmt) {
  if (fmt == Format::Csv) {
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (l) os << ',';
      os << v[l];
    }
    os << '\n';
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const Big& c : v) arr.push_back(c.str());
  os << arr.dump() << '\n';
}

Vec parse_csv_line(const std::string& line) {
  Vec v;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      v.push_back(parse_decimal(line.substr(pos)));
      break;
    }
    v.push_back(parse_decimal(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return v;
}

Vec parse_jsonl_line(const std::string& line) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad jsonl line: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError("jsonl line is not an array");
  Vec v;
  for (const auto& item : arr) {
    if (item.is_string())
      v.push_back(parse_decimal(item.get<std::string>()));
    else if (item.is_number_unsigned())
      v.push_back(Big(item.get<std::uint64_t>()));
    else
      throw ParseError("jsonl coordinate must be a decimal string");
  }
  return v;
}

VecSeq read_sequence(std::istream& is) {
  VecSeq seq;
  std::string line;
  bool jsonl = false;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      jsonl = line.front() == '[';
      first = false;
    }
    Vec v = jsonl ? parse_jsonl_line(line) : parse_csv_line(line);
    if (v.empty()) throw ParseError("empty vector");
    if (seq.vectors.empty())
      seq.dim = static_cast<int>(v.size());
    else if (static_cast<int>(v.size()) != seq.dim)
      throw ParseError("inconsistent dimension across lines");
    seq.vectors.push_back(std::move(v));
  }
  return seq;
}

}  // namespace vecseq

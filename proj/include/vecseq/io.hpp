#ifndef VECSEQ_IO_HPP
#define VECSEQ_IO_HPP

#include <iosfwd>

#include "vecseq/core.hpp"

namespace vecseq {

enum class Format { Csv, Jsonl };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// csv: unsigned decimal coordinates joined by single commas, one vector per
// line. jsonl: one JSON array of decimal strings per line (strings, because
// values outgrow fixed-width integers).
void write_vector(std::ostream& os, const Vec& v, Format fmt);

// Reads a whole sequence; every line must decode to the same dimension. The
// format is detected from the first non-empty line ('[' starts jsonl).
VecSeq read_sequence(std::istream& is);

Vec parse_csv_line(const std::string& line);
Vec parse_jsonl_line(const std::string& line);

}  // namespace vecseq

#endif

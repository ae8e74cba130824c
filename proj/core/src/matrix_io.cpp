#include "rigx/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "rigx/dscore.hpp"

namespace rigx {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Format, what); }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::size_t parse_size(std::string_view s, const std::string& field) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    bad("bad value for " + field + ": '" + std::string(s) + "'");
  return v;
}

// "magic 1 k=v k=v ..." with keys in the given order.
std::map<std::string, std::size_t> parse_header(std::string_view line, std::string_view magic,
                                                const std::vector<std::string>& keys) {
  std::vector<std::string_view> tok;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const auto sp = line.find(' ', pos);
    tok.push_back(line.substr(pos, sp == std::string_view::npos ? line.size() - pos : sp - pos));
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  if (tok.size() != keys.size() + 2 || tok[0] != magic || tok[1] != "1")
    bad("expected header '" + std::string(magic) + " 1 ...', got '" + std::string(line) + "'");
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& key = keys[i];
    const auto t = tok[i + 2];
    if (t.substr(0, key.size() + 1) != key + "=") bad("expected '" + key + "=' in header");
    out[key] = parse_size(t.substr(key.size() + 1), key);
  }
  return out;
}

FieldMatrix parse_rows(const std::vector<std::string_view>& lines, std::size_t first,
                       unsigned p, std::size_t rows, std::size_t cols) {
  if (first + rows > lines.size()) bad("truncated matrix body");
  FieldMatrix m(p, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto line = lines[first + i];
    std::size_t pos = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto sp = line.find(' ', pos);
      const auto tok = line.substr(pos, sp == std::string_view::npos ? line.size() - pos : sp - pos);
      const auto v = parse_size(tok, "entry");
      if (v >= p)
        bad("entry " + std::to_string(v) + " at (" + std::to_string(i) + "," + std::to_string(j) +
            ") not in [0," + std::to_string(p) + ")");
      m.set(i, j, static_cast<long>(v));
      if (j + 1 < cols) {
        if (sp == std::string_view::npos) bad("row " + std::to_string(i) + " is short");
        pos = sp + 1;
      } else if (sp != std::string_view::npos) {
        bad("row " + std::to_string(i) + " has extra entries or trailing whitespace");
      }
    }
    if (cols == 0 && !line.empty()) bad("row " + std::to_string(i) + " should be empty");
  }
  return m;
}

unsigned checked_prime(std::size_t p) {
  if (!is_supported_prime(static_cast<unsigned>(p)) || p > kMaxPrime)
    bad("unsupported modulus p=" + std::to_string(p));
  return static_cast<unsigned>(p);
}

void append_rows(std::string& out, const FieldMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Format, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_matrix(const FieldMatrix& m) {
  std::string out = "gfmat 1 p=" + std::to_string(m.p()) + " m=" + std::to_string(m.rows()) +
                    " n=" + std::to_string(m.cols()) + "\n";
  append_rows(out, m);
  return out;
}

FieldMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) bad("empty matrix text");
  auto h = parse_header(lines[0], "gfmat", {"p", "m", "n"});
  const auto m = parse_rows(lines, 1, checked_prime(h["p"]), h["m"], h["n"]);
  for (std::size_t i = 1 + h["m"]; i < lines.size(); ++i)
    if (!lines[i].empty()) bad("unexpected content after matrix body");
  return m;
}

std::string format_ds(const LinearDS& ds) {
  std::string out = "gfds 1 p=" + std::to_string(ds.p.p()) + " m=" + std::to_string(ds.q.rows()) +
                    " n=" + std::to_string(ds.p.cols()) + " s=" + std::to_string(ds.s) +
                    " t=" + std::to_string(ds.t) + "\n";
  append_rows(out, ds.p);
  out += '\n';
  append_rows(out, ds.q);
  return out;
}

LinearDS parse_ds(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) bad("empty ds text");
  auto h = parse_header(lines[0], "gfds", {"p", "m", "n", "s", "t"});
  const unsigned p = checked_prime(h["p"]);
  const std::size_t s = h["s"];
  LinearDS ds;
  ds.s = s;
  ds.t = h["t"];
  ds.p = parse_rows(lines, 1, p, s, h["n"]);
  if (1 + s >= lines.size() || !lines[1 + s].empty()) bad("expected blank line between P and Q");
  ds.q = parse_rows(lines, 2 + s, p, h["m"], s);
  for (std::size_t i = 2 + s + h["m"]; i < lines.size(); ++i)
    if (!lines[i].empty()) bad("unexpected content after Q");
  return ds;
}

FieldMatrix read_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

LinearDS read_ds_file(const std::string& path) { return parse_ds(slurp(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Format, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::Format, "write failed for '" + path + "'");
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rigx

#include "assoc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoc/field.hpp"

namespace assoc {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("series text: " + what);
}

std::vector<std::string> split_lines(const std::string& text) {
  if (text.empty() || text.back() != '\n') bad("missing final newline");
  if (text.find('\r') != std::string::npos) bad("carriage return");
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string header_value(const std::string& line, const std::string& key) {
  std::string prefix = key + ": ";
  if (line.compare(0, prefix.size(), prefix) != 0)
    bad("expected \"" + key + ":\" line, got \"" + line + "\"");
  return line.substr(prefix.size());
}

// Splits on single spaces; an empty token flags doubled or edge spaces.
std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t sp = s.find(' ', pos);
    if (sp == std::string::npos) sp = s.size();
    out.push_back(s.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return out;
}

long parse_count(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 6) bad(std::string(what) + " out of range: " + s);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad(std::string(what) + " not a number: " + s);
  if (s.size() > 1 && s[0] == '0') bad(std::string(what) + " not canonical: " + s);
  return std::stol(s);
}

struct Parsed {
  AlphabetPtr alpha;
  int truncation = 0;
  bool lyndon = false;
  Integer d;  // 0 when the descriptor is rational
  std::vector<std::pair<Word, Scalar>> terms;
};

Parsed parse_document(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.size() < 5) bad("incomplete header");

  std::vector<std::string> names = split_tokens(header_value(lines[0], "alphabet"));
  for (const auto& n : names)
    if (n.empty()) bad("malformed alphabet list");
  Parsed out;
  try {
    out.alpha = make_alphabet(names);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }

  out.truncation = static_cast<int>(parse_count(header_value(lines[1], "truncation"), "truncation"));
  if (out.truncation < 1) bad("truncation must be positive");

  std::string fd = header_value(lines[2], "field");
  out.d = 0;
  if (fd != "rational") {
    std::vector<std::string> toks = split_tokens(fd);
    if (toks.size() != 2 || toks[0] != "quadratic") bad("unknown field descriptor: " + fd);
    try {
      out.d = Integer(toks[1]);
    } catch (const std::exception&) {
      bad("bad quadratic d: " + toks[1]);
    }
    if (toks[1] != out.d.get_str()) bad("quadratic d not canonical: " + toks[1]);
    try {
      QuadScalar probe(Rational(0), Rational(1), out.d);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }

  std::string bs = header_value(lines[3], "basis");
  if (bs == "word")
    out.lyndon = false;
  else if (bs == "lyndon")
    out.lyndon = true;
  else
    bad("unknown basis flag: " + bs);

  long count = parse_count(header_value(lines[4], "terms"), "term count");
  if (static_cast<long>(lines.size()) != 5 + count) bad("term count does not match document");

  WordOrder order{out.alpha.get()};
  bool used_d = false;
  for (long i = 0; i < count; ++i) {
    const std::string& ln = lines[5 + i];
    size_t sp = ln.find(' ');
    if (sp == std::string::npos || sp == 0 || sp + 1 >= ln.size()) bad("malformed term line: " + ln);
    std::string wtok = ln.substr(0, sp);
    std::string stok = ln.substr(sp + 1);
    Word w;
    try {
      w = out.alpha->parse_word(wtok);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
    if (out.alpha->word_str(w) != wtok) bad("word not canonical: " + wtok);
    if (out.alpha->degree(w) > out.truncation) bad("term above truncation: " + wtok);
    Scalar c;
    try {
      c = parse_scalar(stok);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
    if (scalar_str(c) != stok) bad("scalar not canonical: " + stok);
    if (c.is_zero()) bad("zero coefficient on " + wtok);
    if (!c.is_rational()) {
      if (out.d == 0 || c.d() != out.d) bad("scalar field does not match descriptor: " + stok);
      used_d = true;
    }
    if (!out.terms.empty() && !order(out.terms.back().first, w))
      bad("terms out of canonical order at " + wtok);
    out.terms.emplace_back(std::move(w), std::move(c));
  }
  if (out.d != 0 && !used_d) bad("quadratic descriptor unused by the terms");
  return out;
}

void check_serializable(const AlphabetPtr& alpha) {
  for (int i = 0; i < static_cast<int>(alpha->size()); ++i) {
    if (alpha->letter_degree(i) != 1)
      throw std::invalid_argument("alphabet with weighted letters is not serializable");
    const std::string& n = alpha->name(i);
    if (n.find_first_of(" \t\n\r") != std::string::npos)
      throw std::invalid_argument("alphabet name with whitespace is not serializable: " + n);
  }
}

template <class Map>
Integer derive_d(const Map& terms) {
  Integer d = 0;
  for (const auto& [w, c] : terms) {
    (void)w;
    if (c.is_rational()) continue;
    if (d == 0)
      d = c.d();
    else if (d != c.d())
      throw std::invalid_argument("mixed quadratic fields in one series");
  }
  return d;
}

template <class Map>
std::string render(const AlphabetPtr& alpha, int trunc, bool lyndon, const Map& terms) {
  check_serializable(alpha);
  Integer d = derive_d(terms);
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& n : alpha->names()) out << ' ' << n;
  out << "\ntruncation: " << trunc;
  out << "\nfield: ";
  if (d == 0)
    out << "rational";
  else
    out << "quadratic " << d.get_str();
  out << "\nbasis: " << (lyndon ? "lyndon" : "word");
  out << "\nterms: " << terms.size() << "\n";
  for (const auto& [w, c] : terms) out << alpha->word_str(w) << ' ' << scalar_str(c) << "\n";
  return out.str();
}

}  // namespace

std::string series_to_text(const Series& f) {
  return render(f.alphabet(), f.truncation(), false, f.terms());
}

std::string lie_to_text(const LiePolynomial& p) {
  return render(p.alphabet(), p.truncation(), true, p.coords());
}

Series series_from_text(const std::string& text) {
  Parsed p = parse_document(text);
  if (p.lyndon) bad("expected a word-basis document, got lyndon");
  Series f(p.alpha, p.truncation);
  for (const auto& [w, c] : p.terms) f.add_term(w, c);
  return f;
}

LiePolynomial lie_from_text(const std::string& text) {
  Parsed p = parse_document(text);
  if (!p.lyndon) bad("expected a lyndon-basis document, got word");
  LiePolynomial q(p.alpha, p.truncation);
  for (const auto& [w, c] : p.terms) {
    try {
      q.add_coord(w, c);
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  return q;
}

bool text_is_lyndon(const std::string& text) {
  return parse_document(text).lyndon;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
  out.flush();
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace assoc

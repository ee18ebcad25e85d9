#include "halfint/qexp_io.hpp"

#include <fstream>
#include <sstream>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

struct LineReader {
  std::string_view text;
  size_t pos = 0;
  long line_no = 0;

  bool next(std::string& out) {
    if (pos >= text.size()) return false;
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      // final line without a newline is accepted
      out.assign(text.substr(pos));
      pos = text.size();
    } else {
      out.assign(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
    ++line_no;
    return true;
  }
};

[[noreturn]] void parse_fail(const LineReader& r, long column, const std::string& msg) {
  throw Error(Errc::ParseError,
              "line " + std::to_string(r.line_no) + ":" + std::to_string(column) + ": " + msg,
              r.line_no, column);
}

// Splits "key value" at the first space; value may itself contain spaces.
std::pair<std::string, std::string> split_key(const std::string& line) {
  size_t sp = line.find(' ');
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

long parse_long(LineReader& r, const std::string& value, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_fail(r, 1, std::string("bad integer for '") + what + "': '" + value + "'");
  }
}

std::string expect_key(LineReader& r, const std::string& line, const std::string& key) {
  auto [k, v] = split_key(line);
  if (k != key) parse_fail(r, 1, "expected '" + key + "' but found '" + k + "'");
  return v;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view spec) {
  if (spec == "Q") return NumberField::rationals();
  const std::string_view prefix = "Q[x]/(";
  if (spec.rfind(prefix, 0) != 0)
    fail(Errc::FieldSpecError, "field spec must be 'Q' or 'Q[x]/(c0,...,1) name'");
  size_t close = spec.find(')', prefix.size());
  if (close == std::string_view::npos) fail(Errc::FieldSpecError, "unterminated minimal polynomial");
  std::string_view body = spec.substr(prefix.size(), close - prefix.size());
  std::string_view rest = spec.substr(close + 1);
  if (rest.empty() || rest[0] != ' ' || rest.size() < 2)
    fail(Errc::FieldSpecError, "missing generator name after the minimal polynomial");
  std::string name(rest.substr(1));
  if (name.find(' ') != std::string::npos)
    fail(Errc::FieldSpecError, "generator name must be a single token");

  std::vector<Rational> minpoly;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string_view tok =
        comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
    try {
      minpoly.push_back(parse_rational(tok));
    } catch (const Error& e) {
      fail(Errc::FieldSpecError, std::string("bad minimal polynomial coefficient: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return NumberField::create(std::move(minpoly), std::move(name));
  } catch (const Error& e) {
    fail(Errc::FieldSpecError, e.what());
  }
}

QExpansion parse_qexp(std::string_view text) {
  LineReader r{text};
  std::string line;

  if (!r.next(line) || line != "qexp v1") parse_fail(r, 1, "expected 'qexp v1' header");

  std::vector<std::string> notes;
  if (!r.next(line)) parse_fail(r, 1, "truncated header");
  while (split_key(line).first == "note") {
    notes.push_back(split_key(line).second);
    if (!r.next(line)) parse_fail(r, 1, "truncated header");
  }

  FieldPtr field;
  {
    std::string v = expect_key(r, line, "field");
    try {
      field = parse_field_spec(v);
    } catch (const Error& e) {
      if (e.code() == Errc::FieldSpecError)
        throw Error(Errc::FieldSpecError,
                    "line " + std::to_string(r.line_no) + ":7: " + e.what(), r.line_no, 7);
      throw;
    }
  }

  if (!r.next(line)) parse_fail(r, 1, "truncated header");
  std::optional<FormMeta> meta;
  if (split_key(line).first == "k") {
    long k = parse_long(r, split_key(line).second, "k");
    if (!r.next(line)) parse_fail(r, 1, "truncated header");
    std::string hv = expect_key(r, line, "halfint");
    if (hv != "true" && hv != "false") parse_fail(r, 9, "halfint must be 'true' or 'false'");
    bool halfint = hv == "true";
    if (halfint != (k % 2 != 0))
      parse_fail(r, 9, "halfint flag contradicts the parity of the weight numerator");
    if (!r.next(line)) parse_fail(r, 1, "truncated header");
    long level = parse_long(r, expect_key(r, line, "level"), "level");
    if (!r.next(line)) parse_fail(r, 1, "truncated header");
    std::string cv = expect_key(r, line, "char");
    DirichletCharacter chi = [&] {
      try {
        return DirichletCharacter::parse(cv);
      } catch (const Error& e) {
        parse_fail(r, 6, e.what());
      }
    }();
    meta = FormMeta{k, level, chi};
    try {
      check_meta(*meta);
    } catch (const Error& e) {
      parse_fail(r, 1, e.what());
    }
    if (!r.next(line)) parse_fail(r, 1, "truncated header");
  }

  long first = parse_long(r, expect_key(r, line, "first"), "first");
  if (!r.next(line)) parse_fail(r, 1, "truncated header");
  long prec = parse_long(r, expect_key(r, line, "prec"), "prec");
  if (first < 0) parse_fail(r, 7, "first must be >= 0");
  if (prec < first) parse_fail(r, 6, "prec must be >= first");

  std::vector<FieldElement> coeffs;
  coeffs.reserve(prec - first);
  for (long n = first; n < prec; ++n) {
    if (!r.next(line))
      parse_fail(r, 1, "expected " + std::to_string(prec - first) + " coefficient lines, got " +
                           std::to_string(n - first));
    try {
      coeffs.push_back(FieldElement::parse_csv(field, line));
    } catch (const Error& e) {
      parse_fail(r, 1, std::string("bad coefficient line: ") + e.what());
    }
  }
  if (r.next(line)) {
    if (!line.empty() || r.next(line))
      parse_fail(r, 1, "trailing content after the coefficient block");
  }

  try {
    return QExpansion(field, first, prec, std::move(coeffs), std::move(meta)).with_notes(std::move(notes));
  } catch (const Error& e) {
    parse_fail(r, 1, e.what());
  }
}

std::string write_qexp(const QExpansion& f) {
  std::ostringstream os;
  os << "qexp v1\n";
  for (const auto& n : f.notes()) os << "note " << n << '\n';
  os << "field " << f.field()->spec() << '\n';
  if (f.meta()) {
    os << "k " << f.meta()->weight_num << '\n';
    os << "halfint " << (f.meta()->half_integral() ? "true" : "false") << '\n';
    os << "level " << f.meta()->level << '\n';
    os << "char " << f.meta()->character.spec() << '\n';
  }
  os << "first " << f.first() << '\n';
  os << "prec " << f.prec() << '\n';
  for (const auto& c : f.stored_coeffs()) os << c.to_csv() << '\n';
  return os.str();
}

QExpansion read_qexp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_qexp(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.line(), e.column());
  }
}

void write_qexp_file(const QExpansion& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  out << write_qexp(f);
  if (!out) fail(Errc::IoError, "write to '" + path + "' failed");
}

EigenTable parse_eigen_table(std::string_view text) {
  LineReader r{text};
  std::string line;
  if (!r.next(line) || line != "eigen v1") parse_fail(r, 1, "expected 'eigen v1' header");
  if (!r.next(line)) parse_fail(r, 1, "truncated table");
  FieldPtr field = [&] {
    try {
      return parse_field_spec(expect_key(r, line, "field"));
    } catch (const Error& e) {
      if (e.code() == Errc::FieldSpecError) parse_fail(r, 7, e.what());
      throw;
    }
  }();

  EigenTable table{field, {}};
  while (r.next(line)) {
    if (line.empty() && r.pos >= text.size()) break;
    auto [key, v] = split_key(line);
    if (key != "eigenvalue") parse_fail(r, 1, "expected 'eigenvalue p <coefficients>'");
    size_t sp = v.find(' ');
    if (sp == std::string::npos) parse_fail(r, 12, "eigenvalue line needs a prime and a value");
    long p = parse_long(r, v.substr(0, sp), "prime");
    if (!table.values.empty() && table.values.back().first >= p)
      parse_fail(r, 12, "primes must be strictly increasing");
    try {
      table.values.emplace_back(p, FieldElement::parse_csv(field, v.substr(sp + 1)));
    } catch (const Error& e) {
      parse_fail(r, 1, std::string("bad eigenvalue: ") + e.what());
    }
  }
  return table;
}

std::string write_eigen_table(const EigenTable& table) {
  std::ostringstream os;
  os << "eigen v1\n";
  os << "field " << table.field->spec() << '\n';
  for (const auto& [p, v] : table.values) os << "eigenvalue " << p << ' ' << v.to_csv() << '\n';
  return os.str();
}

EigenTable read_eigen_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_eigen_table(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace halfint

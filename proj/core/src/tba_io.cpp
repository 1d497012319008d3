#include "tabalg/tba_io.hpp"

#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tabalg/errors.hpp"

namespace tabalg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "index '" + tok + "' out of range");
  }
}

Scalar parse_value(const std::string& tok, std::size_t line) {
  try {
    return parse_scalar(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

// Approximate values keep full double precision so files round-trip.
std::string render(const Scalar& v) {
  if (v.is_exact()) return v.str();
  if (!v.is_real()) throw StructuralError("cannot write non-real value " + v.str());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v.real() == 0.0 ? 0.0 : v.real());
  std::string s(buf);
  // keep approximate values recognizable as decimals when re-read
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

StructureConstantTable read_tba(std::istream& in) {
  std::optional<TableBuilder> builder;
  bool header = false;
  std::size_t lineno = 0;
  auto need = [&](const std::vector<std::string>& toks, std::size_t count) {
    if (toks.size() != count) {
      throw ParseError(lineno, "'" + toks[0] + "' expects " + std::to_string(count - 1) +
                                   " argument(s)");
    }
  };
  auto rank_known = [&]() -> TableBuilder& {
    if (!builder) throw ParseError(lineno, "'rank' must precede table data");
    return *builder;
  };
  auto index = [&](const std::string& tok) {
    std::size_t i = parse_index(tok, lineno);
    if (i >= rank_known().rank()) {
      throw ParseError(lineno, "index " + tok + " out of range for rank " +
                                   std::to_string(builder->rank()));
    }
    return i;
  };

  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (!header) {
      if (kw != "tba" || toks.size() != 2 || toks[1] != "1") {
        throw ParseError(lineno, "expected header 'tba 1'");
      }
      header = true;
      continue;
    }
    if (kw == "rank") {
      need(toks, 2);
      if (builder) throw ParseError(lineno, "duplicate 'rank'");
      std::size_t r = parse_index(toks[1], lineno);
      if (r == 0) throw ParseError(lineno, "rank must be positive");
      builder.emplace(r);
    } else if (kw == "label") {
      need(toks, 3);
      rank_known().label(index(toks[1]), toks[2]);
    } else if (kw == "star") {
      need(toks, 3);
      std::size_t i = index(toks[1]), j = index(toks[2]);
      try {
        builder->star(i, j);
      } catch (const StructuralError& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (kw == "deg") {
      need(toks, 3);
      std::size_t i = index(toks[1]);
      builder->degree(i, parse_value(toks[2], lineno));
    } else if (kw == "sc") {
      need(toks, 5);
      std::size_t a = index(toks[1]), b = index(toks[2]), c = index(toks[3]);
      builder->add(a, b, c, parse_value(toks[4], lineno));
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw ParseError(lineno + 1, "missing header 'tba 1'");
  if (!builder) throw ParseError(lineno + 1, "missing 'rank'");
  try {
    return builder->build();
  } catch (const ParseError&) {
    throw;
  } catch (const StructuralError& e) {
    throw ParseError(lineno, e.what());
  }
}

StructureConstantTable parse_tba(const std::string& text) {
  std::istringstream is(text);
  return read_tba(is);
}

std::string write_tba(const StructureConstantTable& t) {
  std::ostringstream os;
  os << "tba 1\n";
  os << "rank " << t.rank() << "\n";
  for (BasisIndex i = 0; i < t.rank(); ++i) {
    if (t.label(i) != default_label(i)) os << "label " << i << " " << t.label(i) << "\n";
  }
  for (BasisIndex i = 0; i < t.rank(); ++i) {
    if (t.star(i) > i) os << "star " << i << " " << t.star(i) << "\n";
  }
  for (BasisIndex i = 0; i < t.rank(); ++i) os << "deg " << i << " " << render(t.degree(i)) << "\n";
  for (BasisIndex a = 0; a < t.rank(); ++a)
    for (BasisIndex b = 0; b < t.rank(); ++b)
      for (const Term& term : t.product(a, b))
        os << "sc " << a << " " << b << " " << term.index << " " << render(term.value) << "\n";
  return os.str();
}

}  // namespace tabalg

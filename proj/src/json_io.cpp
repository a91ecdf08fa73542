#include "grassmann/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace grassmann {

namespace {

const Integer kInt64Max(std::numeric_limits<std::int64_t>::max());
const Integer kInt64Min(std::numeric_limits<std::int64_t>::min());

Json integer_to_json(const Integer& v) {
  if (v >= kInt64Min && v <= kInt64Max) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return integer_to_json(numerator(r));
  return Json(numerator(r).str() + "/" + denominator(r).str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json parse_json_text(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

const Json& require_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = require_field(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

Endomorphism from_rows(const std::vector<std::vector<Scalar>>& rows, DomainKind kind, int n, const std::string& origin) {
  const int rank = n > 0 ? n : static_cast<int>(rows.size());
  if (rank < 1) throw ParseError(origin + ": empty matrix");
  if (static_cast<int>(rows.size()) != rank) {
    throw ParseError(origin + ": expected " + std::to_string(rank) + " rows, got " + std::to_string(rows.size()));
  }
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != rank) {
      throw ParseError(origin + ": row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(rank));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return Endomorphism(rank, kind, std::move(entries));
}

Endomorphism parse_csv(std::string_view text, DomainKind kind, int n, const std::string& origin) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<Scalar> row;
    std::size_t start = 0;
    int field = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view cell = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      ++field;
      try {
        row.push_back(Scalar::parse(kind, cell));
      } catch (const AlgebraError& e) {
        throw ParseError(origin + ": line " + std::to_string(line_no) + ", field " + std::to_string(field) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows, kind, n, origin);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return integer_to_json(v);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return rational_to_json(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return Json(v);
        } else {
          return v.is_neg_inf() ? Json("-inf") : rational_to_json(v.value());
        }
      },
      s.storage());
}

Scalar scalar_from_json(const Json& j, DomainKind kind, const std::string& where) {
  try {
    if (j.is_boolean()) return Scalar::from_bool(kind, j.get<bool>());
    if (j.is_number_unsigned()) return Scalar::from_integer(kind, Integer(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Scalar::from_integer(kind, Integer(j.get<std::int64_t>()));
    if (j.is_number_float()) throw ParseError("floating-point literal " + j.dump() + " (use an integer or \"p/q\")");
    if (j.is_string()) return Scalar::parse(kind, j.get<std::string>());
    throw ParseError("expected a scalar literal, got " + j.dump());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json pair_to_json(const PairScalar& p) { return Json::array({scalar_to_json(p.pos), scalar_to_json(p.neg)}); }

Json multivector_to_json(const MultiVector& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"word", w.indices()}, {"pos", scalar_to_json(c.pos)}, {"neg", scalar_to_json(c.neg)}});
  }
  return {{"n", x.rank()}, {"domain", std::string(domain_name(x.kind()))}, {"terms", std::move(terms)}};
}

MultiVector multivector_from_json(const Json& j) {
  const std::string where = "multivector";
  const int n = int_field(j, "n", where);
  const Json& dom = require_field(j, "domain", where);
  if (!dom.is_string()) throw ParseError(where + ": field \"domain\" must be a string");
  const DomainKind kind = ScalarDomain::from_name(dom.get<std::string>()).kind();
  if (n < 1 || n > kMaxRank) throw ParseError(where + ": rank " + std::to_string(n) + " unsupported");
  const Json& terms = require_field(j, "terms", where);
  if (!terms.is_array()) throw ParseError(where + ": field \"terms\" must be an array");

  std::vector<std::pair<Word, PairScalar>> parsed;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tw = where + ".terms[" + std::to_string(t) + "]";
    const Json& word = require_field(terms[t], "word", tw);
    if (!word.is_array()) throw ParseError(tw + ": \"word\" must be an array of indices");
    std::vector<int> idx;
    for (const Json& i : word) {
      if (!i.is_number_integer()) throw ParseError(tw + ": word indices must be integers");
      idx.push_back(i.get<int>());
    }
    const Scalar pos = terms[t].contains("pos") ? scalar_from_json(terms[t]["pos"], kind, tw + ".pos") : Scalar::zero(kind);
    const Scalar neg = terms[t].contains("neg") ? scalar_from_json(terms[t]["neg"], kind, tw + ".neg") : Scalar::zero(kind);
    // Words need not be canonical on input; an odd reordering swaps the pair.
    std::optional<OrientedWord> ow;
    try {
      ow = sort_word(idx, n);
    } catch (const DegreeError& e) {
      throw ParseError(tw + ": " + e.what());
    }
    if (!ow) continue;
    PairScalar c{pos, neg};
    if (ow->parity == Parity::Odd) {
      if (ow->word.degree() < 2) throw ParseError(tw + ": odd reordering in degree < 2");
      c = pair_swap(c);
    }
    parsed.emplace_back(ow->word, c);
  }
  try {
    return MultiVector::from_terms(n, kind, parsed);
  } catch (const AlgebraError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json endomorphism_to_json(const Endomorphism& f) {
  Json rows = Json::array();
  for (int i = 0; i < f.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < f.rank(); ++j) row.push_back(scalar_to_json(f.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", f.rank()}, {"domain", std::string(domain_name(f.kind()))}, {"matrix", std::move(rows)}};
}

Endomorphism endomorphism_from_json(const Json& j, DomainKind kind, int n) {
  const Json* rows = &j;
  std::string where = "matrix";
  if (j.is_object()) {
    if (j.contains("domain")) {
      const Json& dom = j.at("domain");
      if (!dom.is_string()) throw ParseError("field \"domain\" must be a string");
      const DomainKind declared = ScalarDomain::from_name(dom.get<std::string>()).kind();
      if (declared != kind) {
        throw ParseError("matrix declares domain " + std::string(domain_name(declared)) + " but " +
                         std::string(domain_name(kind)) + " was requested");
      }
    }
    if (j.contains("n")) {
      const int declared = int_field(j, "n", "endomorphism");
      if (n > 0 && declared != n) {
        throw ParseError("matrix declares n = " + std::to_string(declared) + " but n = " + std::to_string(n) + " was requested");
      }
      n = declared;
    }
    rows = &require_field(j, "matrix", "endomorphism");
  }
  if (!rows->is_array()) throw ParseError(where + ": expected an array of rows");
  std::vector<std::vector<Scalar>> parsed;
  for (std::size_t i = 0; i < rows->size(); ++i) {
    const Json& row = (*rows)[i];
    const std::string rw = where + " row " + std::to_string(i + 1);
    if (!row.is_array()) throw ParseError(rw + ": expected an array");
    std::vector<Scalar> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      out.push_back(scalar_from_json(row[c], kind, rw + ", column " + std::to_string(c + 1)));
    }
    parsed.push_back(std::move(out));
  }
  return from_rows(parsed, kind, n, where);
}

Json zpolynomial_to_json(const ZPolynomial& p) {
  Json coeffs = Json::array();
  for (const MultiVector& c : p.coefficients()) coeffs.push_back(multivector_to_json(c));
  return {{"trunc", p.trunc()}, {"coefficients", std::move(coeffs)}};
}

Json eigen_data_to_json(const EigenData& data) {
  Json e = Json::array();
  Json h = Json::array();
  for (const PairScalar& p : data.e) e.push_back(pair_to_json(p));
  for (const PairScalar& p : data.h) h.push_back(pair_to_json(p));
  return {{"n", data.n}, {"e", std::move(e)}, {"h", std::move(h)}};
}

Endomorphism parse_matrix(std::string_view path_or_inline, ScalarDomain domain, int n) {
  const std::string_view spec = trim(path_or_inline);
  if (spec.empty()) throw ParseError("empty matrix argument");
  if (spec.front() == '[' || spec.front() == '{') {
    return endomorphism_from_json(parse_json_text(spec, "inline matrix"), domain.kind(), n);
  }
  const std::string path(spec);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const std::string_view body = trim(text);
  if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
    return endomorphism_from_json(parse_json_text(body, path), domain.kind(), n);
  }
  return parse_csv(text, domain.kind(), n, path);
}

}  // namespace grassmann

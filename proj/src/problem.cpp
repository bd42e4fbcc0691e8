#include "contact/problem.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace contact {

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  int n;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what + " in '" + s +
                                "'");
  }

  Integer parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return Integer(s.substr(start, pos - start));
  }

  Poly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end");
    const int nv = 2 * n + 1;
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_uint();
      if (eat('/')) {
        Integer den = parse_uint();
        if (den == 0) fail("zero denominator");
        return Poly::constant(nv, rat(num, den));
      }
      return Poly::constant(nv, rat(num, Integer(1)));
    }
    if (c == 'x' || c == 'y') {
      ++pos;
      Integer idx = parse_uint();
      long i = idx.get_si();
      if (i < 1 || i > n) fail("variable index out of range");
      return Poly::variable(nv, c == 'x' ? static_cast<int>(i - 1)
                                         : static_cast<int>(n + i - 1));
    }
    if (c == 'z') {
      ++pos;
      return Poly::variable(nv, 2 * n);
    }
    fail("unexpected character");
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (eat('^')) {
      Integer e = parse_uint();
      long k = e.get_si();
      Poly out = Poly::constant(2 * n + 1, rat(1));
      for (long i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Poly parse_term() {
    Poly out = parse_factor();
    while (eat('*')) out = out * parse_factor();
    return out;
  }

  Poly parse_expr() {
    skip_ws();
    Poly out(2 * n + 1);
    bool neg = false;
    if (eat('-')) neg = true;
    Poly first = parse_term();
    out = neg ? -first : first;
    while (true) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        bool minus = s[pos] == '-';
        ++pos;
        Poly t = parse_term();
        out = minus ? out - t : out + t;
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, int n) {
  PolyParser p{text, 0, n};
  Poly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits "[a, b, c]" on top-level commas; nested parentheses are respected.
std::vector<std::string> split_bracket_list(const std::string& line,
                                            const std::string& context) {
  std::size_t open = line.find('[');
  std::size_t close = line.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("document: expected [ ... ] in " + context);
  std::string body = line.substr(open + 1, close - open - 1);
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  bool any = false;
  for (char c : cur)
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  if (any || !out.empty()) out.push_back(cur);
  return out;
}

Generator parse_generator_name(const std::string& name, int n) {
  if (name == "Z") return Generator{GenType::Z, 0};
  if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y')) {
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw std::invalid_argument("document: bad generator '" + name + "'");
      idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1 || idx > n)
      throw std::invalid_argument("document: generator index out of range in '" +
                                  name + "'");
    return Generator{name[0] == 'X' ? GenType::X : GenType::Y, idx};
  }
  throw std::invalid_argument("document: unknown generator '" + name + "'");
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

ProblemDocument parse_document(const std::string& text) {
  ProblemDocument doc;
  bool saw_version = false;
  std::istringstream is(text);
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(is, raw)) {
    std::string line = strip(raw);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = strip(line.substr(0, hash));
    lines.push_back(line);
  }
  std::size_t i = 0;
  auto need_int = [](const std::vector<std::string>& toks, const std::string& key) {
    if (toks.size() != 2)
      throw std::invalid_argument("document: expected '" + key + " <int>'");
    return std::stoi(toks[1]);
  };
  while (i < lines.size()) {
    const std::string& line = lines[i];
    if (line.empty()) {
      ++i;
      continue;
    }
    auto toks = split_ws(line);
    const std::string& key = toks[0];
    if (key == "format_version") {
      doc.format_version = need_int(toks, key);
      saw_version = true;
      ++i;
    } else if (key == "n") {
      doc.n = need_int(toks, key);
      ++i;
    } else if (key == "order") {
      doc.order = need_int(toks, key);
      ++i;
    } else if (key == "rank_e") {
      doc.rank_e = need_int(toks, key);
      ++i;
    } else if (key == "rank_f") {
      doc.rank_f = need_int(toks, key);
      ++i;
    } else if (key == "term" && toks.size() == 2 && toks[1] == "{") {
      ProblemDocument::Term term;
      ++i;
      bool saw_coeff = false;
      while (i < lines.size() && strip(lines[i]) != "}") {
        const std::string& body = lines[i];
        if (body.empty()) {
          ++i;
          continue;
        }
        auto btoks = split_ws(body);
        if (btoks[0] == "word") {
          for (std::size_t t = 1; t < btoks.size(); ++t)
            term.word.push_back(parse_generator_name(btoks[t], doc.n));
          ++i;
        } else if (btoks[0] == "coeff") {
          if (body.find('[') == std::string::npos)
            throw std::invalid_argument("document: coeff expects [");
          ++i;
          while (i < lines.size() && strip(lines[i]) != "]") {
            if (!lines[i].empty())
              term.coeff.push_back(split_bracket_list(lines[i], "coeff row"));
            ++i;
          }
          if (i == lines.size())
            throw std::invalid_argument("document: unterminated coeff block");
          ++i;  // skip "]"
          saw_coeff = true;
        } else {
          throw std::invalid_argument("document: unknown term key '" + btoks[0] +
                                      "'");
        }
      }
      if (i == lines.size())
        throw std::invalid_argument("document: unterminated term block");
      ++i;  // skip "}"
      if (!saw_coeff)
        throw std::invalid_argument("document: term without coeff block");
      doc.terms.push_back(std::move(term));
    } else if (key == "options" && toks.size() == 2 && toks[1] == "{") {
      ++i;
      while (i < lines.size() && strip(lines[i]) != "}") {
        auto btoks = split_ws(lines[i]);
        if (btoks.empty()) {
          ++i;
          continue;
        }
        if (btoks[0] == "lmax")
          doc.lmax = need_int(btoks, "lmax");
        else if (btoks[0] == "nmax")
          doc.nmax = need_int(btoks, "nmax");
        else
          throw std::invalid_argument("document: unknown option '" + btoks[0] + "'");
        ++i;
      }
      if (i == lines.size())
        throw std::invalid_argument("document: unterminated options block");
      ++i;
    } else if (key == "kostant" && toks.size() == 2 && toks[1] == "{") {
      KostantBlock kb;
      ++i;
      while (i < lines.size() && strip(lines[i]) != "}") {
        auto btoks = split_ws(lines[i]);
        if (btoks.empty()) {
          ++i;
          continue;
        }
        if (btoks[0] == "weight") {
          for (const auto& part : split_bracket_list(lines[i], "weight"))
            kb.weight.push_back(std::stol(strip(part)));
        } else if (btoks[0] == "m") {
          kb.m = need_int(btoks, "m");
        } else {
          throw std::invalid_argument("document: unknown kostant key '" +
                                      btoks[0] + "'");
        }
        ++i;
      }
      if (i == lines.size())
        throw std::invalid_argument("document: unterminated kostant block");
      ++i;
      doc.kostant = std::move(kb);
    } else if (key == "solution" && toks.size() == 2 && toks[1] == "{") {
      ++i;
      std::vector<std::string> comps;
      while (i < lines.size() && strip(lines[i]) != "}") {
        auto btoks = split_ws(lines[i]);
        if (btoks.empty()) {
          ++i;
          continue;
        }
        if (btoks[0] == "components") {
          for (const auto& part : split_bracket_list(lines[i], "components"))
            comps.push_back(strip(part));
        } else {
          throw std::invalid_argument("document: unknown solution key '" +
                                      btoks[0] + "'");
        }
        ++i;
      }
      if (i == lines.size())
        throw std::invalid_argument("document: unterminated solution block");
      ++i;
      doc.solution = std::move(comps);
    } else {
      throw std::invalid_argument("document: unknown key '" + key + "'");
    }
  }
  if (!saw_version)
    throw std::invalid_argument("document: missing format_version");
  if (doc.format_version != 1)
    throw std::invalid_argument("document: unsupported format_version");
  return doc;
}

std::string serialize_document(const ProblemDocument& doc) {
  std::ostringstream os;
  os << "format_version " << doc.format_version << "\n";
  os << "n " << doc.n << "\n";
  os << "order " << doc.order << "\n";
  os << "rank_e " << doc.rank_e << "\n";
  os << "rank_f " << doc.rank_f << "\n";
  for (const auto& term : doc.terms) {
    os << "term {\n";
    os << "  word";
    for (const auto& g : term.word) os << " " << generator_name(g);
    os << "\n";
    os << "  coeff [\n";
    for (const auto& row : term.coeff) {
      os << "    [";
      for (std::size_t j = 0; j < row.size(); ++j)
        os << (j ? ", " : "") << strip(row[j]);
      os << "]\n";
    }
    os << "  ]\n";
    os << "}\n";
  }
  os << "options {\n  lmax " << doc.lmax << "\n  nmax " << doc.nmax << "\n}\n";
  if (doc.kostant) {
    os << "kostant {\n  weight [";
    for (std::size_t j = 0; j < doc.kostant->weight.size(); ++j)
      os << (j ? ", " : "") << doc.kostant->weight[j];
    os << "]\n  m " << doc.kostant->m << "\n}\n";
  }
  if (doc.solution) {
    os << "solution {\n  components [";
    for (std::size_t j = 0; j < doc.solution->size(); ++j)
      os << (j ? ", " : "") << strip((*doc.solution)[j]);
    os << "]\n}\n";
  }
  return os.str();
}

DarbouxOperator parse_operator(const ProblemDocument& doc) {
  DarbouxOperator op;
  op.n = doc.n;
  op.rank_E = doc.rank_e;
  op.rank_F = doc.rank_f;
  op.declared_order = doc.order;
  for (const auto& term : doc.terms) {
    DarbouxTerm t;
    t.word = term.word;
    if (static_cast<int>(term.coeff.size()) != doc.rank_f)
      throw std::invalid_argument("document: coeff must have rank_f rows");
    for (const auto& row : term.coeff) {
      if (static_cast<int>(row.size()) != doc.rank_e)
        throw std::invalid_argument("document: coeff row must have rank_e entries");
      std::vector<Poly> prow;
      for (const auto& cell : row) prow.push_back(parse_poly(cell, doc.n));
      t.coeff.push_back(std::move(prow));
    }
    op.terms.push_back(std::move(t));
  }
  op.validate();
  return op;
}

PolySection parse_solution_section(const ProblemDocument& doc) {
  if (!doc.solution)
    throw std::invalid_argument("document: no solution block present");
  if (static_cast<int>(doc.solution->size()) != doc.rank_e)
    throw std::invalid_argument("document: solution must have rank_e components");
  PolySection s;
  s.rank = doc.rank_e;
  for (const auto& comp : *doc.solution) s.components.push_back(parse_poly(comp, doc.n));
  return s;
}

Report run_prolong(const ProblemDocument& doc) {
  Report r;
  r.problem = doc;
  DarbouxOperator op = parse_operator(doc);
  if (!has_constant_top_coefficients(op))
    throw std::invalid_argument(
        "prolong: top-weight terms must have constant coefficients");
  r.weighted_order = op.weighted_order();
  Matrix symbol = enhanced_symbol(op);
  r.symbol_rank = rank(symbol);
  r.chain = contact_chain(symbol, op.n, op.declared_order, doc.lmax);
  r.oracle = stabilized_dim(op, doc.nmax);
  if (op.declared_order == 1 && op.n >= 2 &&
      r.chain.verdict == Verdict::FiniteType && has_constant_coefficients(op)) {
    FlatConnection conn = build_flat_connection(op, r.chain);
    r.connection_rank = conn.total_rank;
    r.connection = check_connection(op, conn, doc.nmax);
  }
  if (doc.kostant) {
    r.graded = graded_check(doc.n, doc.order, doc.kostant->m,
                            cartan_lmax(doc.n, doc.order, doc.kostant->m));
  }
  return r;
}

namespace {

std::string join_levels(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "report {\n";
  os << "  format_version " << r.format_version << "\n";
  os << "  problem {\n";
  std::istringstream doc(serialize_document(r.problem));
  std::string line;
  while (std::getline(doc, line)) os << "    " << line << "\n";
  os << "  }\n";
  os << "  n " << r.problem.n << "\n";
  os << "  order " << r.problem.order << "\n";
  os << "  rank_e " << r.problem.rank_e << "\n";
  os << "  rank_f " << r.problem.rank_f << "\n";
  os << "  weighted_order " << r.weighted_order << "\n";
  os << "  symbol_rank " << r.symbol_rank << "\n";
  os << "  dim_kh " << r.chain.dim_KH << "\n";
  os << "  levels " << join_levels(r.chain.levels) << "\n";
  os << "  verdict " << verdict_name(r.chain.verdict) << "\n";
  if (r.chain.rank_T) os << "  rank_t " << *r.chain.rank_T << "\n";
  if (r.oracle) {
    os << "  oracle {\n";
    os << "    dims " << join_levels(r.oracle->dims_by_degree) << "\n";
    if (r.oracle->stabilized_dim)
      os << "    stabilized " << *r.oracle->stabilized_dim << "\n";
    else
      os << "    stabilized none\n";
    os << "  }\n";
  }
  if (r.connection) {
    os << "  connection {\n";
    os << "    total_rank " << r.connection_rank << "\n";
    os << "    parallel_dim " << r.connection->parallel_dim << "\n";
    os << "    projection_bijective "
       << (r.connection->projection_bijective ? "true" : "false") << "\n";
    os << "  }\n";
  }
  if (r.graded) {
    os << "  kostant {\n";
    os << "    dims_vj " << join_levels(r.graded->dims_vj) << "\n";
    os << "    total " << r.graded->total.get_str() << "\n";
    os << "    weyl_total " << r.graded->weyl_total.get_str() << "\n";
    os << "    passes " << (r.graded->passes ? "true" : "false") << "\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["format_version"] = r.format_version;
  j["problem"] = serialize_document(r.problem);
  j["n"] = r.problem.n;
  j["order"] = r.problem.order;
  j["rank_e"] = r.problem.rank_e;
  j["rank_f"] = r.problem.rank_f;
  j["weighted_order"] = r.weighted_order;
  j["symbol_rank"] = r.symbol_rank;
  j["dim_kh"] = r.chain.dim_KH;
  j["levels"] = r.chain.levels;
  j["verdict"] = verdict_name(r.chain.verdict);
  if (r.chain.rank_T) j["rank_t"] = *r.chain.rank_T;
  if (r.oracle) {
    j["oracle"]["dims"] = r.oracle->dims_by_degree;
    if (r.oracle->stabilized_dim)
      j["oracle"]["stabilized"] = *r.oracle->stabilized_dim;
    else
      j["oracle"]["stabilized"] = nullptr;
  }
  if (r.connection) {
    j["connection"]["total_rank"] = r.connection_rank;
    j["connection"]["parallel_dim"] = r.connection->parallel_dim;
    j["connection"]["projection_bijective"] = r.connection->projection_bijective;
  }
  if (r.graded) {
    j["kostant"]["dims_vj"] = r.graded->dims_vj;
    j["kostant"]["total"] = r.graded->total.get_str();
    j["kostant"]["weyl_total"] = r.graded->weyl_total.get_str();
    j["kostant"]["passes"] = r.graded->passes;
  }
  return j.dump(2) + "\n";
}

}  // namespace contact

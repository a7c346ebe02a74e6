#include "qhh/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

namespace {

bool ident_ok(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (auto pos = body.find('#'); pos != std::string::npos) body.resize(pos);
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

ParsedInput parse_dsl(const std::string& text) {
  Quiver quiver;
  struct PendingRelation {
    std::vector<std::string> arrows;
    int line;
  };
  std::vector<PendingRelation> pending;
  std::optional<FieldSpec> field;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "field") {
      if (field) throw ParseError(lineno, "duplicate field line");
      if (toks.size() == 2 && toks[1] == "Q") {
        field = FieldSpec{0};
      } else if (toks.size() == 3 && toks[1] == "F") {
        unsigned long long p = 0;
        try {
          std::size_t used = 0;
          p = std::stoull(toks[2], &used);
          if (used != toks[2].size()) throw std::invalid_argument("");
        } catch (...) {
          throw ParseError(lineno, "expected a prime after 'field F'");
        }
        if (!is_prime_u64(p))
          throw SemanticError("field characteristic " + toks[2] +
                              " is not prime");
        field = FieldSpec{p};
      } else {
        throw ParseError(lineno, "expected 'field Q' or 'field F <prime>'");
      }
    } else if (kw == "vertex") {
      if (toks.size() < 2)
        throw ParseError(lineno, "expected at least one vertex name");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!ident_ok(toks[i]))
          throw ParseError(lineno, "bad identifier '" + toks[i] + "'");
        quiver.add_vertex(toks[i]);
      }
    } else if (kw == "arrow") {
      if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
        throw ParseError(lineno, "expected 'arrow name : src -> tgt'");
      if (!ident_ok(toks[1]))
        throw ParseError(lineno, "bad identifier '" + toks[1] + "'");
      auto u = quiver.vertex_index(toks[3]);
      auto v = quiver.vertex_index(toks[5]);
      if (!u) throw SemanticError("unknown vertex '" + toks[3] + "'");
      if (!v) throw SemanticError("unknown vertex '" + toks[5] + "'");
      quiver.add_arrow(toks[1], *u, *v);
    } else if (kw == "relation") {
      if (toks.size() != 2)
        throw ParseError(lineno, "expected 'relation a.b.c'");
      auto names = split_dots(toks[1]);
      for (const auto& n : names)
        if (!ident_ok(n))
          throw ParseError(lineno, "bad identifier '" + n + "' in relation");
      pending.push_back({names, lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  std::vector<Path> relations;
  for (const auto& pr : pending) {
    Path p;
    for (const auto& n : pr.arrows) {
      auto a = quiver.arrow_index(n);
      if (!a) throw SemanticError("unknown arrow '" + n + "' in relation");
      p.arrows.push_back(*a);
    }
    relations.push_back(std::move(p));
  }

  return ParsedInput{Presentation(std::move(quiver), std::move(relations)),
                     field};
}

ParsedInput parse_dsl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dsl(buf.str());
}

std::string serialize_dsl(const Presentation& p,
                          const std::optional<FieldSpec>& field) {
  const Quiver& q = p.quiver();
  std::ostringstream out;
  if (field) {
    if (field->is_rational())
      out << "field Q\n";
    else
      out << "field F " << field->p << "\n";
  }
  if (q.n_vertices() > 0) {
    out << "vertex";
    for (int v = 0; v < q.n_vertices(); ++v) out << ' ' << q.vertex_name(v);
    out << "\n";
  }
  for (int a = 0; a < q.n_arrows(); ++a)
    out << "arrow " << q.arrow(a).name << " : "
        << q.vertex_name(q.arrow(a).src) << " -> "
        << q.vertex_name(q.arrow(a).tgt) << "\n";
  std::vector<Path> rels = p.relations();
  std::sort(rels.begin(), rels.end());
  for (const auto& r : rels) out << "relation " << path_str(q, r) << "\n";
  return out.str();
}

}  // namespace qhh

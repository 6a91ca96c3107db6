#include "qv/io.hpp"

#include <fstream>
#include <sstream>

namespace qv {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ": " + msg);
}

int parse_mult(const Line& line, size_t idx) {
  if (line.tokens.size() <= idx) return 1;
  try {
    const int m = std::stoi(line.tokens[idx]);
    if (m < 1) fail(line.number, "multiplicity must be >= 1");
    return m;
  } catch (const parse_error&) {
    throw;
  } catch (...) {
    fail(line.number, "bad multiplicity '" + line.tokens[idx] + "'");
  }
}

std::vector<int> parse_path(const Quiver& q, const std::string& text,
                            int line) {
  std::vector<int> path;
  std::string label;
  std::istringstream in(text);
  while (std::getline(in, label, '>')) {
    if (label.empty()) fail(line, "empty vertex in path");
    if (!q.has_vertex(label)) fail(line, "unknown vertex '" + label + "'");
    path.push_back(q.index_of(label));
  }
  if (path.size() < 2) fail(line, "path needs at least two vertices");
  return path;
}

struct ParsedQuiver {
  Quiver quiver;
  std::vector<Line> relation_lines;
};

ParsedQuiver parse_quiver_lines(const std::string& text,
                                bool allow_relations) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{"quiver"})
    fail(lines.empty() ? 1 : lines.front().number,
         "expected 'quiver' header");

  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, int>> arrows;
  std::vector<Line> relations;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) fail(line.number, "usage: vertex <label>");
      vertices.push_back(t[1]);
    } else if (t[0] == "arrow") {
      if (t.size() < 3 || t.size() > 4)
        fail(line.number, "usage: arrow <src> <dst> [mult]");
      arrows.emplace_back(t[1], t[2], parse_mult(line, 3));
    } else if (t[0] == "relation" && allow_relations) {
      relations.push_back(line);
    } else {
      fail(line.number, "unexpected line '" + t[0] + "'");
    }
  }
  try {
    return {Quiver::from_arrows(std::move(vertices), arrows),
            std::move(relations)};
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  return parse_quiver_lines(text, false).quiver;
}

Presentation parse_presentation(const std::string& text) {
  auto parsed = parse_quiver_lines(text, true);
  Presentation p;
  p.quiver = std::move(parsed.quiver);
  for (const auto& line : parsed.relation_lines) {
    const auto& t = line.tokens;
    // relation <src> <tgt> : <path> [+ <path>]...
    if (t.size() < 5 || t[3] != ":")
      fail(line.number, "usage: relation <src> <tgt> : <path> [+ <path>]");
    RelationGroup g;
    if (!p.quiver.has_vertex(t[1]) || !p.quiver.has_vertex(t[2]))
      fail(line.number, "unknown relation endpoint");
    g.source = p.quiver.index_of(t[1]);
    g.target = p.quiver.index_of(t[2]);
    bool expect_path = true;
    for (size_t i = 4; i < t.size(); ++i) {
      if (t[i] == "+") {
        if (expect_path) fail(line.number, "misplaced '+'");
        expect_path = true;
        continue;
      }
      if (!expect_path) fail(line.number, "paths must be joined with '+'");
      g.paths.push_back(parse_path(p.quiver, t[i], line.number));
      expect_path = false;
    }
    if (expect_path) fail(line.number, "trailing '+'");
    p.relations.push_back(std::move(g));
  }
  try {
    validate(p);
  } catch (const error& e) {
    throw parse_error(e.what());
  }
  return p;
}

std::string render_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "quiver\n";
  for (const auto& v : q.vertices()) out << "vertex " << v << "\n";
  for (const auto& a : q.arrows()) {
    out << "arrow " << q.vertex(a.src) << " " << q.vertex(a.dst);
    if (q.entry(a.src, a.dst) > 1) out << " " << q.entry(a.src, a.dst);
    out << "\n";
  }
  return out.str();
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << render_quiver(p.quiver);
  for (const auto& g : p.relations) {
    out << "relation " << p.quiver.vertex(g.source) << " "
        << p.quiver.vertex(g.target) << " :";
    for (size_t i = 0; i < g.paths.size(); ++i) {
      out << (i ? " + " : " ");
      for (size_t t = 0; t < g.paths[i].size(); ++t) {
        if (t) out << ">";
        out << p.quiver.vertex(g.paths[i][t]);
      }
    }
    out << "\n";
  }
  return out.str();
}

SignedGraph parse_signed_graph(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{"sgraph"})
    fail(lines.empty() ? 1 : lines.front().number,
         "expected 'sgraph' header");
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, EdgeSign, int>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (t.size() != 2) fail(line.number, "usage: vertex <label>");
      vertices.push_back(t[1]);
    } else if (t[0] == "solid" || t[0] == "dotted") {
      if (t.size() < 3 || t.size() > 4)
        fail(line.number, "usage: " + t[0] + " <u> <v> [mult]");
      edges.emplace_back(t[1], t[2],
                         t[0] == "solid" ? EdgeSign::solid : EdgeSign::dotted,
                         parse_mult(line, 3));
    } else {
      fail(line.number, "unexpected line '" + t[0] + "'");
    }
  }
  try {
    std::vector<std::string> vcopy = vertices;
    SignedGraph shell(std::move(vcopy), {});
    std::vector<SignedEdge> es;
    for (const auto& [u, v, sign, mult] : edges)
      es.push_back({shell.index_of(u), shell.index_of(v), sign, mult});
    return SignedGraph(std::move(vertices), std::move(es));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

std::string render_signed_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "sgraph\n";
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const auto& e : g.edges()) {
    out << (e.sign == EdgeSign::solid ? "solid " : "dotted ") << g.vertex(e.u)
        << " " << g.vertex(e.v);
    if (e.mult > 1) out << " " << e.mult;
    out << "\n";
  }
  return out.str();
}

std::string render_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const auto& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows())
    for (int m = 0; m < q.entry(a.src, a.dst); ++m)
      out << "  \"" << q.vertex(a.src) << "\" -> \"" << q.vertex(a.dst)
          << "\";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qv

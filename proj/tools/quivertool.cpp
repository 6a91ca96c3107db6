// Command-line front end: quiver mutation, finite-type and minimal-infinite
// decisions, signed quadratic forms, and the quiver <-> quiver-with-relations
// bridge for minimal infinite cluster quivers.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qv/io.hpp"
#include "qv/minimal_infinite.hpp"
#include "qv/mutation_class.hpp"
#include "qv/presentation.hpp"
#include "qv/splus.hpp"

namespace {

using namespace qv;

std::string arrow_set_text(const Quiver& q, const ArrowSet& s) {
  std::string out = "{";
  for (const auto& a : s)
    out += " " + q.vertex(a.src) + "->" + q.vertex(a.dst);
  out += s.empty() ? "}" : " }";
  return out;
}

std::string radical_text(const std::vector<std::string>& labels,
                         const RadicalVector& r) {
  std::string out;
  for (size_t i = 0; i < r.z.size(); ++i) {
    if (i) out += " ";
    out += labels[i] + ":" + std::to_string(r.z[i]);
  }
  out += r.positive ? "  (positive" : "  (not positive";
  out += r.sincere ? ", sincere)" : ", not sincere)";
  return out;
}

std::string cycle_text(const Quiver& q, const Cycle& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ",";
    out += q.vertex(c.vertices[i]);
  }
  out += c.oriented ? ") oriented" : ") non-oriented";
  return out;
}

std::string types_text(const std::vector<DynkinType>& types) {
  std::string out;
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) out += " ";
    out += types[i].name();
  }
  return out;
}

void print_splus(const Quiver& q, const SplusResult& r) {
  std::cout << "initial odd set = " << arrow_set_text(q, r.initial) << "\n";
  std::cout << "sign changes at = {";
  for (const auto& v : r.sign_changes) std::cout << " " << v;
  std::cout << (r.sign_changes.empty() ? "}" : " }") << "\n";
  std::cout << "S+ = " << arrow_set_text(q, r.splus) << "\n";
  std::cout << "radical = " << radical_text(q.vertices(), r.radical) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"cluster quiver / tame concealed algebra toolkit"};
  app.require_subcommand(1);

  std::string file, vertex;
  std::size_t limit = 1'000'000;
  long long bound = 3;
  std::size_t cap = std::size_t{1} << 20;
  bool exhaustive = false;

  auto* c_mutate = app.add_subcommand("mutate", "mutate a quiver at a vertex");
  c_mutate->add_option("-k,--vertex", vertex, "vertex to mutate at")
      ->required();
  c_mutate->add_option("file", file, "quiver file")->required();

  auto* c_class = app.add_subcommand("classify", "finite / infinite type");
  c_class->add_option("file", file)->required();

  auto* c_mclass =
      app.add_subcommand("mutation-class", "count canonical mutation classes");
  c_mclass->add_option("--limit", limit, "class limit");
  c_mclass->add_option("file", file)->required();

  auto* c_acyc =
      app.add_subcommand("acyclic-rep", "acyclic member of the mutation class");
  c_acyc->add_option("--limit", limit, "class limit");
  c_acyc->add_option("file", file)->required();

  auto* c_mininf =
      app.add_subcommand("minimal-infinite", "minimal infinite decision");
  c_mininf->add_option("file", file)->required();

  auto* c_cycles = app.add_subcommand("full-cycles", "chordless cycles");
  c_cycles->add_option("file", file)->required();

  auto* c_splus =
      app.add_subcommand("splus", "unique positive admissible arrow set");
  c_splus->add_option("file", file)->required();

  auto* c_verify = app.add_subcommand(
      "verify-splus", "check uniqueness over all odd arrow sets");
  c_verify->add_flag("--exhaustive", exhaustive,
                     "enumerate every odd set (default)");
  c_verify->add_option("file", file)->required();

  auto* c_rad = app.add_subcommand("radical", "radical vector of a signed graph");
  c_rad->add_option("file", file)->required();

  auto* c_def = app.add_subcommand("definiteness", "exact definiteness verdict");
  c_def->add_option("file", file)->required();

  auto* c_roots = app.add_subcommand("roots", "positive roots within a box");
  c_roots->add_option("--bound", bound, "coordinate bound");
  c_roots->add_option("file", file)->required();

  auto* c_sign = app.add_subcommand("sign-change", "toggle signs at a vertex");
  c_sign->add_option("-k,--vertex", vertex, "vertex")->required();
  c_sign->add_option("file", file)->required();

  auto* c_tocluster =
      app.add_subcommand("to-cluster", "cluster quiver of a presentation");
  c_tocluster->add_option("file", file)->required();

  auto* c_totilted = app.add_subcommand(
      "to-tilted", "tame concealed presentation of a minimal infinite quiver");
  c_totilted->add_option("file", file)->required();

  auto* c_rel = app.add_subcommand(
      "relations", "relations of the cluster-tilted algebra on the quiver");
  c_rel->add_option("file", file)->required();

  auto* c_round = app.add_subcommand("roundtrip",
                                     "presentation -> quiver -> presentation");
  c_round->add_option("file", file)->required();

  auto* c_dot = app.add_subcommand("dot", "DOT export");
  c_dot->add_option("file", file)->required();

  auto* c_atlas = app.add_subcommand(
      "atlas", "minimal infinite members of an extended Dynkin mutation class");
  c_atlas->add_option("--limit", limit, "class limit");
  c_atlas->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (*c_mutate) {
    const auto q = parse_quiver(read_file(file));
    std::cout << render_quiver(mutate(q, vertex));
  } else if (*c_class) {
    const auto res = is_finite_type(parse_quiver(read_file(file)));
    if (res.finite)
      std::cout << "finite " << types_text(res.types) << "\n";
    else
      std::cout << "infinite\n";
  } else if (*c_mclass) {
    const auto res =
        enumerate_mutation_class(parse_quiver(read_file(file)), limit);
    if (res.complete)
      std::cout << "classes " << res.classes.size() << "\n";
    else
      std::cout << "limit exceeded after " << res.classes.size()
                << " classes\n";
  } else if (*c_acyc) {
    const auto rep = acyclic_representative(parse_quiver(read_file(file)), limit);
    if (rep)
      std::cout << render_quiver(*rep);
    else
      std::cout << "none\n";
  } else if (*c_mininf) {
    const auto q = parse_quiver(read_file(file));
    const auto res = is_minimal_infinite(q);
    if (res.minimal_infinite) {
      std::cout << "yes\n";
      if (q.size() == 2)
        std::cout << "generalized Kronecker regime (2 vertices)\n";
      const auto structure = check_structure(q);
      if (structure.cycle_graph)
        std::cout << "structure: non-oriented cycle\n";
      else if (structure.ok)
        std::cout << "structure: ok\n";
      for (const auto& v : structure.violations)
        std::cout << "structure violation: " << v << "\n";
      for (const auto& [v, types] : res.deletions)
        std::cout << "delete " << v << " -> finite " << types_text(types)
                  << "\n";
    } else if (res.whole.finite) {
      std::cout << "no\nfinite type " << types_text(res.whole.types) << "\n";
    } else {
      std::cout << "no\ndeleting " << *res.witness_vertex
                << " leaves an infinite quiver\n";
    }
  } else if (*c_cycles) {
    const auto q = parse_quiver(read_file(file));
    for (const auto& c : full_cycles(q))
      std::cout << cycle_text(q, c) << "\n";
  } else if (*c_splus) {
    const auto q = parse_quiver(read_file(file));
    print_splus(q, find_splus(q));
  } else if (*c_verify) {
    const auto q = parse_quiver(read_file(file));
    const auto rep = verify_uniqueness(q, cap);
    if (rep.a_tilde_skipped) {
      std::cout << "skipped: cycle-shaped quiver, the hereditary algebra "
                   "itself is the tame concealed one\n";
    } else {
      std::cout << "odd sets: " << rep.odd_set_count << "\n";
      std::cout << (rep.unique ? "unique S+ = " : "NOT unique, S+ = ")
                << arrow_set_text(q, rep.splus) << "\n";
      for (const auto& [s, negs] : rep.others) {
        std::cout << arrow_set_text(q, s) << " -> negative at {";
        for (const auto& v : negs) std::cout << " " << v;
        std::cout << (negs.empty() ? "}" : " }") << "\n";
      }
    }
  } else if (*c_rad) {
    const auto g = parse_signed_graph(read_file(file));
    const auto r = radical_vector(form_from_signed_graph(g));
    std::cout << "radical = " << radical_text(g.vertices(), r) << "\n";
  } else if (*c_def) {
    const auto g = parse_signed_graph(read_file(file));
    const auto d = definiteness(form_from_signed_graph(g));
    switch (d.kind) {
      case Definiteness::positive_definite:
        std::cout << "positive_definite\n";
        break;
      case Definiteness::positive_semidefinite:
        std::cout << "positive_semidefinite corank " << d.corank << "\n";
        break;
      case Definiteness::indefinite:
        std::cout << "indefinite\n";
        break;
    }
  } else if (*c_roots) {
    const auto g = parse_signed_graph(read_file(file));
    for (const auto& x : positive_roots(form_from_signed_graph(g), bound)) {
      for (size_t i = 0; i < x.size(); ++i)
        std::cout << (i ? " " : "") << x[i];
      std::cout << "\n";
    }
  } else if (*c_sign) {
    const auto g = parse_signed_graph(read_file(file));
    std::cout << render_signed_graph(sign_change(g, vertex));
  } else if (*c_tocluster) {
    std::cout << render_quiver(
        to_cluster_quiver(parse_presentation(read_file(file))));
  } else if (*c_totilted) {
    std::cout << render_presentation(
        tame_concealed_presentation(parse_quiver(read_file(file))));
  } else if (*c_rel) {
    const auto rep = synthesize_relations(parse_quiver(read_file(file)));
    std::cout << render_presentation(rep.presentation);
    std::cout << "arms " << rep.max_arms << "\n";
  } else if (*c_round) {
    const auto p = parse_presentation(read_file(file));
    const auto rep = round_trip_check(p);
    std::cout << (rep.ok ? "ok" : "mismatch") << ": " << rep.detail << "\n";
    if (!rep.radical.z.empty())
      std::cout << "radical = "
                << radical_text(p.quiver.vertices(), rep.radical) << "\n";
    if (!rep.ok) throw error("round trip failed: " + rep.detail);
  } else if (*c_dot) {
    std::cout << render_dot(parse_quiver(read_file(file)));
  } else if (*c_atlas) {
    const auto q = parse_quiver(read_file(file));
    if (!q.is_acyclic()) throw error("atlas input must be acyclic");
    const auto type = classify_graph(underlying_graph(q));
    if (!type || !type->extended())
      throw error("atlas input must be an extended Dynkin orientation");
    const auto cls = enumerate_mutation_class(q, limit);
    if (!cls.complete) throw error("class limit exceeded");
    int index = 0;
    for (const auto& c : cls.classes) {
      const Quiver member = c.quiver();
      if (!is_minimal_infinite(member).minimal_infinite) continue;
      std::cout << "member " << ++index << "\n";
      std::cout << render_quiver(member);
      const auto sp = find_splus(member);
      std::cout << "S+ = " << arrow_set_text(member, sp.splus) << "\n";
      std::cout << "radical = "
                << radical_text(member.vertices(), sp.radical) << "\n";
      std::cout << render_presentation(tame_concealed_presentation(member));
      std::cout << "---\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qv::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

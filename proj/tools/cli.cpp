#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coxkit/diagram.hpp"
#include "coxkit/logic.hpp"
#include "coxkit/permgrp.hpp"
#include "coxkit/profinite.hpp"
#include "coxkit/titsrep.hpp"

namespace coxkit::cli {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    const auto e = cur.find_last_not_of(" \t\r\n");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::string vertex_list(const std::vector<std::size_t>& v, const char* prefix, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::string(prefix) + std::to_string(v[i] + 1);
  return s;
}

std::uint64_t search_budget() {
  if (const char* s = std::getenv("COXKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000;
}

// One line per subgroup, element words separated by commas.
std::vector<std::vector<perm::GroupWord>> parse_subgroups(const std::string& text, const perm::Presentation& p) {
  std::vector<std::vector<perm::GroupWord>> out;
  for (std::string line : split_list(text, '\n')) {
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    const auto words = split_list(line, ',');
    if (words.empty()) continue;
    std::vector<perm::GroupWord> sub;
    for (const auto& w : words) sub.push_back(perm::parse_group_word(w, p.generators));
    out.push_back(std::move(sub));
  }
  return out;
}

struct GroupData {
  perm::Presentation presentation;
  std::vector<std::vector<perm::GroupWord>> subgroups;
};

GroupData catalog_group_data(const std::string& id) {
  const auto& e = profinite::Catalog::instance().at(id);
  GroupData d{perm::cayley_presentation(e.group), {}};
  for (const auto& sub : perm::subgroup_class_representatives(e.table)) {
    std::vector<perm::GroupWord> words;
    for (perm::Index x : sub) words.push_back(perm::group_word_of(e.group, x));
    d.subgroups.push_back(std::move(words));
  }
  return d;
}

perm::Index parse_element(const profinite::CatalogEntry& e, const std::string& text) {
  if (!text.empty() && text.front() == '(') return e.group.require_index(perm::Permutation::parse(text, e.order));
  std::vector<std::string> names;
  std::vector<perm::Index> images;
  for (std::size_t k = 0; k < e.group.generators().size(); ++k) {
    names.push_back("g" + std::to_string(k + 1));
    images.push_back(e.group.require_index(e.group.generators()[k]));
  }
  return perm::evaluate(e.table, perm::parse_group_word(text, names), images);
}

std::pair<std::string, std::string> split_binding(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coxkit: Coxeter diagrams, reflection representations, crystallographic groups, amalgams,\n"
               "first-order formulas over finite groups and finite-quotient fingerprints."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  app.add_option("--seed", seed, "Seed for every fuzz corpus")->capture_default_str();
  app.footer("Environment: COXKIT_BUDGET overrides search budgets (formula evaluation: quantifier visits, default 1e7;\n"
             "hom search: generator-image tuples per target, default 1e9).");
  const auto records = [&] { return format == "records"; };

  std::function<int()> action;

  // classify
  std::string diagram_file;
  auto* classify = app.add_subcommand("classify", "Classify a Coxeter diagram (spherical, affine or other)");
  classify->add_option("diagram", diagram_file, "Diagram file ('verts N', 'edge i j L|inf'), or - for stdin")->required();
  classify->callback([&] {
    action = [&] {
      const auto r = diagram::classify(diagram::parse_diagram(read_file(diagram_file)));
      if (!records()) {
        out << r.summary() << "\n";
        return 0;
      }
      for (const auto& c : r.components)
        out << "component\t" << vertex_list(c.vertices, "", ",") << "\t" << diagram::to_string(c.kind) << "\t"
            << (c.kind == diagram::Kind::Other ? "-" : c.family.ascii()) << "\n";
      out << "classification\t" << diagram::to_string(r.global) << "\t" << r.summary() << "\n";
      return 0;
    };
  });

  // centralizer
  std::size_t gen = 0;
  auto* centralizer = app.add_subcommand("centralizer", "Free rank of the centralizer of a generator (odd subgraph)");
  centralizer->add_option("diagram", diagram_file, "Diagram file")->required();
  centralizer->add_option("--gen", gen, "Generator, 1-based")->required()->check(CLI::PositiveNumber);
  centralizer->callback([&] {
    action = [&] {
      const auto m = diagram::parse_diagram(read_file(diagram_file));
      if (gen > m.size()) throw std::invalid_argument("generator " + std::to_string(gen) + " out of range");
      const auto r = diagram::centralizer_rank(m, gen - 1);
      if (records()) {
        out << "centralizer\t" << gen << "\t" << vertex_list(r.commuting, "", ",") << "\t"
            << vertex_list(r.odd_component, "", ",") << "\t" << r.edges << "\t" << r.vertices << "\t" << r.free_rank << "\n";
      } else {
        out << "commuting set: {" << vertex_list(r.commuting, "s", ", ") << "}\n"
            << "odd component: {" << vertex_list(r.odd_component, "s", ", ") << "} with " << r.edges << " edges, "
            << r.vertices << " vertices\n"
            << "free rank k = " << r.free_rank << "\n";
      }
      return 0;
    };
  });

  // special-subgroups
  auto* special = app.add_subcommand("special-subgroups", "List the special spherical subgroups");
  special->add_option("diagram", diagram_file, "Diagram file")->required();
  special->callback([&] {
    action = [&] {
      const auto m = diagram::parse_diagram(read_file(diagram_file));
      for (const auto& t : diagram::special_spherical_subgroups(m)) {
        const std::string type = t.empty() ? "trivial" : diagram::classify(m.induced(t)).summary();
        if (records())
          out << "special\t" << vertex_list(t, "", ",") << "\t" << type << "\n";
        else
          out << "{" << vertex_list(t, "s", ", ") << "}  " << type << "\n";
      }
      return 0;
    };
  });

  // word-eq
  std::string w1, w2;
  auto* word_eq = app.add_subcommand("word-eq", "Decide equality of two words in the Coxeter group");
  word_eq->add_option("diagram", diagram_file, "Diagram file")->required();
  word_eq->add_option("--w1", w1, "First word, 1-based generator indices")->required();
  word_eq->add_option("--w2", w2, "Second word")->required();
  word_eq->callback([&] {
    action = [&] {
      const auto rep = titsrep::ReflectionRep::build(diagram::parse_diagram(read_file(diagram_file)));
      const bool eq = titsrep::words_equal(rep, titsrep::parse_word(w1, rep.rank()), titsrep::parse_word(w2, rep.rank()));
      out << (records() ? (eq ? "word-eq\tequal\n" : "word-eq\tdifferent\n") : (eq ? "equal\n" : "not equal\n"));
      return 0;
    };
  });

  // order
  std::string w;
  std::size_t order_bound = 1000;
  auto* order = app.add_subcommand("order", "Order of a word in the Coxeter group, up to a bound");
  order->add_option("diagram", diagram_file, "Diagram file")->required();
  order->add_option("--w", w, "Word, 1-based generator indices")->required();
  order->add_option("--bound", order_bound, "Largest order tried")->capture_default_str();
  order->callback([&] {
    action = [&] {
      const auto rep = titsrep::ReflectionRep::build(diagram::parse_diagram(read_file(diagram_file)));
      const auto o = titsrep::element_order(rep, titsrep::parse_word(w, rep.rank()), order_bound);
      if (records())
        out << "order\t" << (o ? std::to_string(*o) : "none") << "\t" << order_bound << "\n";
      else if (o)
        out << "order " << *o << "\n";
      else
        out << "no finite order <= " << order_bound << "\n";
      return 0;
    };
  });

  // hom-count
  std::string presentation_file, target;
  auto* hom = app.add_subcommand("hom-count", "Count homomorphisms and epimorphisms into a catalog group");
  hom->add_option("--presentation", presentation_file, "Presentation file ('gens a b', 'rel word')")->required();
  hom->add_option("--target", target, "Catalog id (8.5), name (D8) or a file of generating permutations, one per line")->required();
  hom->callback([&] {
    action = [&] {
      const auto p = perm::parse_presentation(read_file(presentation_file));
      std::string label, name;
      perm::HomCount c;
      if (const auto* e = profinite::Catalog::instance().find(target)) {
        label = e->id;
        name = " (" + e->name + ")";
        c = perm::hom_count(p, e->table);
      } else if (std::ifstream(target)) {
        std::vector<perm::Permutation> gens;
        for (const auto& line : split_list(read_file(target), '\n'))
          if (line[0] != '#') gens.push_back(perm::Permutation::parse(line));
        std::size_t degree = 0;
        for (const auto& g : gens) degree = std::max(degree, g.degree());
        for (auto& g : gens) g = perm::Permutation::parse(g.to_string(), degree);
        const auto q = perm::PermGroup::closure(gens, degree);
        label = target;
        name = " (order " + std::to_string(q.order()) + ")";
        c = perm::hom_count(p, q);
      } else {
        throw std::invalid_argument("'" + target + "' is neither a catalog group nor a permutation file");
      }
      if (records())
        out << "hom\t" << label << "\t" << c.homs << "\t" << c.epis << "\n";
      else
        out << label << name << ": " << c.homs << " homomorphisms, " << c.epis << " epimorphisms\n";
      return 0;
    };
  });

  // fingerprint
  std::size_t fp_bound = 31;
  std::string out_file;
  auto* fp = app.add_subcommand("fingerprint", "Hom/epi counts into every catalog group up to an order bound");
  fp->add_option("--presentation", presentation_file, "Presentation file")->required();
  fp->add_option("--bound", fp_bound, "Order bound, at most 31")->capture_default_str()->check(CLI::Range(1, 31));
  fp->add_option("--out", out_file, "Write the fingerprint here instead of standard output");
  fp->callback([&] {
    action = [&] {
      const auto f = profinite::fingerprint(perm::parse_presentation(read_file(presentation_file)), fp_bound, search_budget());
      const auto text = profinite::format_fingerprint(f);
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream o(out_file);
        if (!(o << text)) throw std::runtime_error("cannot write " + out_file);
        if (!records()) out << "wrote " << f.entries.size() << " entries to " << out_file << "\n";
      }
      return 0;
    };
  });

  // compare-fingerprints
  std::string f1, f2;
  auto* cmp = app.add_subcommand("compare-fingerprints", "Compare two fingerprint files");
  cmp->add_option("first", f1, "Fingerprint file")->required();
  cmp->add_option("second", f2, "Fingerprint file")->required();
  cmp->callback([&] {
    action = [&] {
      const auto c =
          profinite::compare(profinite::parse_fingerprint(read_file(f1)), profinite::parse_fingerprint(read_file(f2)));
      if (!records())
        out << profinite::format_comparison(c) << "\n";
      else if (c.equal)
        out << "compare\tequal\t" << c.bound << "\n";
      else
        out << "compare\tdifferent\t" << c.id << "\t" << c.first.homs << "\t" << c.second.homs << "\t" << c.first.epis
            << "\t" << c.second.epis << "\n";
      return 0;
    };
  });

  // emit-formula
  std::string kind, subgroups_file, catalog_id, words_text, theta_text, h_text, z_text;
  std::size_t m = 0;
  auto* emit = app.add_subcommand("emit-formula", "Emit chi, Finite_G or gamma as formula text");
  emit->add_option("--kind", kind, "chi | finite-g | gamma")->required()->check(CLI::IsMember({"chi", "finite-g", "gamma"}));
  emit->add_option("--m", m, "Exponent for chi")->check(CLI::PositiveNumber);
  emit->add_option("--presentation", presentation_file, "Presentation file (finite-g, gamma)");
  emit->add_option("--subgroups", subgroups_file,
                   "Finite subgroup representatives: one line per subgroup, element words separated by commas");
  emit->add_option("--catalog", catalog_id,
                   "Use a catalog group: its Cayley presentation and subgroup class representatives");
  emit->add_option("--w", words_text, "gamma: words of the tuple, separated by ';'");
  emit->add_option("--z", z_text, "gamma: names of the free variables, separated by ';' (default z1, z2, ...)");
  emit->add_option("--theta", theta_text, "gamma: formula with one free variable, or a file holding it");
  emit->add_option("--hgens", h_text, "gamma: generating words of H, separated by ';'");
  emit->callback([&] {
    action = [&] {
      logic::Formula f;
      if (kind == "chi") {
        if (m == 0) throw std::invalid_argument("--kind chi needs --m");
        f = logic::emit_chi(m);
      } else {
        GroupData d;
        if (!catalog_id.empty()) {
          d = catalog_group_data(catalog_id);
        } else {
          if (presentation_file.empty() || subgroups_file.empty())
            throw std::invalid_argument("need --catalog, or --presentation with --subgroups");
          d.presentation = perm::parse_presentation(read_file(presentation_file));
          d.subgroups = parse_subgroups(read_file(subgroups_file), d.presentation);
        }
        if (kind == "finite-g") {
          f = logic::emit_finite_g(d.presentation, d.subgroups);
        } else {
          if (theta_text.empty()) throw std::invalid_argument("--kind gamma needs --theta");
          std::ifstream probe(theta_text);
          const logic::Formula theta = logic::parse_formula(probe ? read_file(theta_text) : theta_text);
          std::vector<perm::GroupWord> ws, hs;
          for (const auto& s : split_list(words_text, ';')) ws.push_back(perm::parse_group_word(s, d.presentation.generators));
          for (const auto& s : split_list(h_text, ';')) hs.push_back(perm::parse_group_word(s, d.presentation.generators));
          std::vector<std::string> z = split_list(z_text, ';');
          if (z_text.empty())
            for (std::size_t i = 0; i < ws.size(); ++i) z.push_back("z" + std::to_string(i + 1));
          f = logic::emit_gamma(d.presentation, z, ws, theta, d.subgroups, hs);
        }
      }
      const auto cls = logic::to_string(logic::classify_prefix(f));
      if (records())
        out << "formula\t" << cls << "\t" << logic::render(f) << "\n";
      else
        out << "# prefix class: " << cls << "\n" << logic::render(f) << "\n";
      return 0;
    };
  });

  // eval
  std::string formula_file, model_id;
  std::vector<std::string> assigns, consts;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula over a catalog group");
  eval->add_option("--formula", formula_file, "Formula file")->required();
  eval->add_option("--model", model_id, "Catalog id or name")->required();
  eval->add_option("--assign", assigns,
                   "Free variable value, name=value; value is a word in g1..gk or cycle notation in the catalog's degree");
  eval->add_option("--const", consts, "Constant value, name=value (referred to as $name)");
  eval->callback([&] {
    action = [&] {
      const auto f = logic::parse_formula(read_file(formula_file));
      const auto& e = profinite::Catalog::instance().at(model_id);
      std::map<std::string, perm::Permutation> cs;
      for (const auto& s : consts) {
        const auto [name, value] = split_binding(s);
        cs.emplace(name, e.group.element(parse_element(e, value)));
      }
      const auto model = logic::FiniteGroupModel::make(e.group, cs);
      logic::Assignment a;
      for (const auto& s : assigns) {
        const auto [name, value] = split_binding(s);
        a[name] = parse_element(e, value);
      }
      const bool v = logic::evaluate(f, model, a, logic::budget_from_env());
      out << (records() ? "eval\t" : "") << (v ? "true" : "false") << "\n";
      return 0;
    };
  });

  // verify-paper
  std::string section;
  auto* verify = app.add_subcommand("verify-paper", "Run a reproducibility section and report each check");
  verify->add_option("--section", section, "Section to run")->required()->check(CLI::IsMember(section_names()));
  verify->callback([&] {
    action = [&] {
      const auto rep = verify_section(section, seed);
      out << (records() ? rep.records() : rep.render());
      return rep.passed() ? 0 : 1;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    return action ? action() : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coxkit::cli

// surfbraid: command-line front end for surface braid computations.
//
// Exit status: 0 success, 1 mathematical negative, 2 usage or input error,
// 3 resource limit.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <surfbraid/surfbraid.hpp>

namespace {

  using namespace surfbraid;

  constexpr int kOk       = 0;
  constexpr int kNegative = 1;
  constexpr int kUsage    = 2;
  constexpr int kResource = 3;

  struct CommonFlags {
    std::optional<int>         genus, boundary, strands, max_chords, max_beads, window, jobs;
    std::optional<std::size_t> node_budget;
    std::string                config_path;
    std::string                cache_dir;

    [[nodiscard]] Config resolve(int min_strands) const {
      Config cfg;
      if (!config_path.empty()) {
        cfg = load_config(config_path, cfg);
      }
      auto set = [](auto& dst, auto const& src) {
        if (src) {
          dst = *src;
        }
      };
      set(cfg.surface.genus, genus);
      set(cfg.surface.boundary, boundary);
      set(cfg.surface.strands, strands);
      set(cfg.trunc.max_chords, max_chords);
      set(cfg.trunc.max_beads, max_beads);
      set(cfg.window, window);
      set(cfg.jobs, jobs);
      set(cfg.node_budget, node_budget);
      if (!cache_dir.empty()) {
        cfg.cache_dir = cache_dir;
      }
      cfg.validate(min_strands);
      return cfg;
    }
  };

  void add_common(CLI::App* app, CommonFlags& f) {
    app->add_option("--genus,-g", f.genus, "surface genus g");
    app->add_option("--boundary,-p", f.boundary, "number of boundary components p");
    app->add_option("--strands,-n", f.strands, "number of strands n");
    app->add_option("--max-chords", f.max_chords, "chord degree truncation D");
    app->add_option("--max-beads", f.max_beads, "bead length truncation L");
    app->add_option("--window", f.window, "ideal membership window W");
    app->add_option("--node-budget", f.node_budget, "node budget for word search");
    app->add_option("--jobs,-j", f.jobs, "worker threads");
    app->add_option("--config", f.config_path, "flat key = value configuration file");
    app->add_option("--cache-dir", f.cache_dir, "directory for cached tables");
  }

  void print_membership(MembershipResult const& r) {
    if (r.member) {
      std::cout << "MEMBER rows=" << r.rows << " columns=" << r.columns << "\n";
      for (auto const& e : r.certificate) {
        std::cout << "  " << to_string(e) << "\n";
      }
    } else {
      std::cout << (r.exhausted ? "NOT-FOUND (window exhausted)" : "NOT-FOUND") << " rows="
                << r.rows << " columns=" << r.columns << "\n";
    }
  }

  std::string dims_table(SurfaceParams const& s, int max_degree, SympOptions opt, int jobs) {
    SympAlgebra const                     alg(s, opt);
    std::vector<std::size_t>              dims(static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::future<std::size_t>> pending;
    int                                   next = 0;
    while (next <= max_degree || !pending.empty()) {
      while (next <= max_degree && static_cast<int>(pending.size()) < jobs) {
        pending.push_back(
            std::async(std::launch::async, [&alg, d = next] { return alg.graded_dim(d); }));
        ++next;
      }
      int const first = next - static_cast<int>(pending.size());
      dims[static_cast<std::size_t>(first)] = pending.front().get();
      pending.erase(pending.begin());
    }
    std::string out = "degree, dimension\n";
    for (std::size_t d = 0; d < dims.size(); ++d) {
      out += std::to_string(d) + ", " + std::to_string(dims[d]) + "\n";
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surfbraid: braids on surfaces, their degree-one symbols and H1 obstructions"};
  app.require_subcommand(1);
  CommonFlags flags;
  int         status = kOk;

  // braid ...
  auto* braid = app.add_subcommand("braid", "surface braid words");
  braid->require_subcommand(1);
  std::string word_u, word_v;
  int         depth = 1;

  auto* b_parse = braid->add_subcommand("parse", "parse and print a braid word");
  b_parse->add_option("word", word_u)->required();
  auto* b_mul = braid->add_subcommand("mul", "free-reduced product of two words");
  b_mul->add_option("u", word_u)->required();
  b_mul->add_option("v", word_v)->required();
  auto* b_inv   = braid->add_subcommand("inv", "inverse word");
  b_inv->add_option("word", word_u)->required();
  auto* b_perm  = braid->add_subcommand("perm", "strand permutation of a word");
  b_perm->add_option("word", word_u)->required();
  auto* b_theta = braid->add_subcommand("theta", "wreath image eps0 of a word");
  b_theta->add_option("word", word_u)->required();
  auto* b_rel   = braid->add_subcommand("relators", "list the presentation relators");
  auto* b_equal = braid->add_subcommand("equal", "bounded search for an equality proof");
  b_equal->add_option("u", word_u)->required();
  b_equal->add_option("v", word_v)->required();
  b_equal->add_option("--depth", depth, "maximum number of relator moves");
  for (auto* sub : {b_parse, b_mul, b_inv, b_perm, b_theta, b_rel, b_equal}) {
    add_common(sub, flags);
  }

  // singular desing
  auto* singular = app.add_subcommand("singular", "singular braid words");
  singular->require_subcommand(1);
  auto* s_desing = singular->add_subcommand("desing", "expand singular crossings");
  s_desing->add_option("word", word_u)->required();
  add_common(s_desing, flags);

  // gr symbol
  auto* gr = app.add_subcommand("gr", "associated graded computations");
  gr->require_subcommand(1);
  std::string jexpr;
  auto*       g_symbol = gr->add_subcommand("symbol", "degree-one symbol of a J-expression");
  g_symbol->add_option("--jexpr", jexpr, "summands 'coef | u | i | v' separated by ';'")
      ->required();
  add_common(g_symbol, flags);

  // diagram member|equal
  auto* diagram = app.add_subcommand("diagram", "chord diagrams with beads");
  diagram->require_subcommand(1);
  auto* d_member = diagram->add_subcommand("member", "membership in the relation ideal");
  d_member->add_option("x", word_u, "terms 'c * mono ; perm=...' joined by ' + '")->required();
  auto* d_equal = diagram->add_subcommand("equal", "equality in the quotient");
  d_equal->add_option("x", word_u)->required();
  d_equal->add_option("y", word_v)->required();
  add_common(d_member, flags);
  add_common(d_equal, flags);

  // h1 class
  auto* h1       = app.add_subcommand("h1", "abelianization");
  h1->require_subcommand(1);
  auto* h_class  = h1->add_subcommand("class", "H1 class of a diagram of chord degree <= 1");
  h_class->add_option("x", word_u)->required();
  add_common(h_class, flags);

  // verify-theorem
  std::string report_path;
  auto* verify = app.add_subcommand("verify-theorem", "run the obstruction pipeline");
  verify->add_option("--report", report_path, "write the report to this file");
  add_common(verify, flags);

  // symplectic dims|twist-check
  auto* symp = app.add_subcommand("symplectic", "symplectic chord diagram algebra");
  symp->require_subcommand(1);
  int  max_degree = 4;
  bool no_twist = false, regrade = false;
  auto* y_dims = symp->add_subcommand("dims", "graded dimensions up to a degree");
  y_dims->add_option("--max-degree,-d", max_degree, "largest degree")->required();
  y_dims->add_flag("--no-twist", no_twist, "drop the twist relation");
  y_dims->add_flag("--regrade", regrade, "give chord generators degree 1");
  auto* y_twist = symp->add_subcommand("twist-check", "is the twist relation redundant");
  add_common(y_dims, flags);
  add_common(y_twist, flags);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    if (rc != 0) {
      std::cerr << app.help();
      return kUsage;
    }
    return kOk;
  }

  try {
    Config const        cfg = flags.resolve(*y_dims ? 1 : 2);
    SurfaceParams const s   = cfg.surface;

    if (*b_parse) {
      std::cout << to_string(parse_braid_word(word_u, s)) << "\n";
    } else if (*b_mul) {
      auto w = free_reduce(parse_braid_word(word_u, s) * parse_braid_word(word_v, s));
      std::cout << to_string(w) << "\n";
    } else if (*b_inv) {
      std::cout << to_string(inverse(parse_braid_word(word_u, s))) << "\n";
    } else if (*b_perm) {
      std::cout << epsilon0(parse_braid_word(word_u, s), s).perm.cycles(true) << "\n";
    } else if (*b_theta) {
      std::cout << to_string(epsilon0(parse_braid_word(word_u, s), s)) << "\n";
    } else if (*b_rel) {
      for (auto const& r : relators(s)) {
        std::cout << family_tag(r.family) << "  " << to_string(r.word) << "\n";
      }
    } else if (*b_equal) {
      auto r = bounded_equal(parse_braid_word(word_u, s), parse_braid_word(word_v, s), s, depth,
                             cfg.node_budget);
      if (r.equal) {
        std::cout << "EQUAL moves=" << r.moves.size() << "\n";
        for (auto const& m : r.moves) {
          std::cout << "  " << to_string(m) << "\n";
        }
      } else {
        std::cout << "NOT-FOUND depth=" << depth << " nodes=" << r.nodes_explored
                  << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n";
        status = r.budget_exhausted ? kResource : kNegative;
      }
    } else if (*s_desing) {
      std::cout << to_string(desingularize(parse_braid_word(word_u, s, true))) << "\n";
    } else if (*g_symbol) {
      auto e = parse_jexpression(jexpr);
      std::cout << to_string(degree_one_symbol(e, s, cfg.trunc)) << "\n";
    } else if (*d_member || *d_equal) {
      auto x = parse_wreath_diagram(word_u, s.strands, cfg.trunc);
      if (*d_equal) {
        x -= parse_wreath_diagram(word_v, s.strands, cfg.trunc);
      }
      auto r = ideal_member(x, s, cfg.trunc, cfg.window);
      print_membership(r);
      if (!r.member) {
        status = r.exhausted ? kResource : kNegative;
      }
    } else if (*h_class) {
      auto x = parse_wreath_diagram(word_u, s.strands, cfg.trunc);
      std::cout << to_string(h1_class(x, s)) << "\n";
    } else if (*verify) {
      VerifierOptions opt;
      opt.trunc       = cfg.trunc;
      opt.window      = cfg.window;
      opt.node_budget = cfg.node_budget;
      auto rep        = verify_nonexistence(s, opt);
      auto text       = to_string(rep);
      std::cout << text;
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
          throw ParameterError("cannot write report file " + report_path);
        }
        out << text;
      }
      status = rep.verdict == Verdict::ObstructionEstablished ? kOk : kNegative;
    } else if (*y_dims) {
      if (max_degree < 0) {
        throw ParameterError("max degree must be non-negative");
      }
      SympOptions opt;
      opt.include_twist  = !no_twist;
      opt.regrade_chords = regrade;
      DimsKey const key{s, max_degree, opt.include_twist, opt.regrade_chords};
      std::optional<std::string> table;
      if (!cfg.cache_dir.empty()) {
        table = read_dims_cache(cfg.cache_dir, key);
      }
      if (!table) {
        table = dims_table(s, max_degree, opt, cfg.jobs);
        if (!cfg.cache_dir.empty()) {
          write_dims_cache(cfg.cache_dir, key, *table);
        }
      }
      std::cout << *table;
    } else if (*y_twist) {
      bool r = symp_twist_redundancy(s);
      std::cout << (r ? "true" : "false") << "\n";
      status = r ? kOk : kNegative;
    }
  } catch (HypothesisError const& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return kNegative;
  } catch (ResourceError const& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (OverflowError const& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kResource;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}

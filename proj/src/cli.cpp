#include "smallcox/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "smallcox/complexes.hpp"
#include "smallcox/congruence.hpp"
#include "smallcox/crystallo.hpp"
#include "smallcox/errors.hpp"
#include "smallcox/rewriting.hpp"
#include "smallcox/tits.hpp"
#include "smallcox/verify.hpp"

namespace smallcox {

  namespace {

    using Json = nlohmann::ordered_json;

    struct SystemOptions {
      std::string              family;
      std::size_t              n = 0;
      std::optional<unsigned>  exponent;
      std::string              matrix_file;
      std::string              edges;
    };

    void add_system_options(CLI::App* app, SystemOptions& o) {
      app->add_option("--family", o.family,
                      "twin, triplet, symmetric, universal, w_nm or racg")
          ->check(CLI::IsMember(
              {"twin", "triplet", "symmetric", "universal", "w_nm", "racg"}));
      app->add_option("-n", o.n, "family parameter (vertex count for racg)");
      app->add_option("--exponent", o.exponent, "exponent m of w_nm");
      app->add_option("--matrix", o.matrix_file, "Coxeter matrix file")->check(CLI::ExistingFile);
      app->add_option("--edges", o.edges, "racg graph edges as \"u v u v ...\"");
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ValidationError("cannot read " + path);
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    CoxeterSystem make_system(SystemOptions const& o) {
      if (!o.matrix_file.empty()) {
        if (!o.family.empty()) {
          throw PreconditionError("give either --matrix or --family, not both");
        }
        return parse_coxeter_matrix(read_file(o.matrix_file));
      }
      if (o.family.empty()) {
        throw PreconditionError("a system needs --family or --matrix");
      }
      Family family = parse_family(o.family);
      if (family == Family::racg) {
        SimpleGraph        g(o.n);
        std::istringstream in(o.edges);
        std::size_t        u = 0, v = 0;
        while (in >> u) {
          if (!(in >> v)) {
            throw ValidationError("--edges needs an even number of vertices");
          }
          g.add_edge(u, v);
        }
        if (!in.eof()) {
          throw ValidationError("malformed --edges");
        }
        return named_system(family, o.n, o.exponent, g);
      }
      return named_system(family, o.n, o.exponent);
    }

    Word make_word(CoxeterSystem const& system, std::string const& text) {
      Word w = parse_word(text);
      validate_word(system, w);
      return w;
    }

    Json big(BigInt const& x) {
      if (x.fits_slong_p()) {
        return x.get_si();
      }
      return x.get_str();
    }

    Json matrix_json(IntMatrix const& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) {
          row.push_back(big(m(i, j)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    Json matrix_json(ModMatrix const& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) {
          row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    Json invariants_json(AbelianInvariants const& inv) {
      Json torsion = Json::array();
      for (auto const& d : inv.torsion) {
        torsion.push_back(big(d));
      }
      return Json{{"invariants", format_invariants(inv)},
                  {"free_rank", inv.free_rank},
                  {"torsion", torsion}};
    }

    Json holonomy_json(HolonomyReport const& h) {
      Json witnesses = Json::array();
      for (auto const& w : h.kernel_witnesses) {
        witnesses.push_back(w);
      }
      return Json{{"quotient", h.quotient},
                  {"dimension", h.dimension},
                  {"holonomy_order", h.holonomy_order},
                  {"faithful", h.faithful},
                  {"kernel_witnesses", witnesses}};
    }

    // Text mode prints one "key: value" line per field.
    void emit(Json const& record, bool json, std::ostream& out) {
      if (json) {
        out << record.dump() << '\n';
        return;
      }
      for (auto const& [key, value] : record.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      }
    }

  }  // namespace

  int dispatch(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Integral representations, congruence quotients and subgroup "
                 "presentations of small Coxeter groups"};
    app.name("smallcox");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output");

    SystemOptions sys;
    std::size_t   cap = default_budget;
    std::string   word_text;
    unsigned      modulus = 0;

    auto* tits_cmd = app.add_subcommand("tits", "generator matrices, or the matrix of a word");
    add_system_options(tits_cmd, sys);
    tits_cmd->add_option("--word", word_text, "word to evaluate");
    tits_cmd->add_option("-m", modulus, "reduce modulo m");

    std::string dump_file;
    auto*       image_cmd = app.add_subcommand("image", "order of the image modulo m");
    add_system_options(image_cmd, sys);
    image_cmd->add_option("-m", modulus, "modulus")->required()->check(CLI::Range(2u, 65535u));
    image_cmd->add_option("--cap", cap, "element budget");
    image_cmd->add_option("--dump", dump_file, "write all elements to a file");

    auto* member_cmd = app.add_subcommand("member", "membership in the congruence subgroup");
    add_system_options(member_cmd, sys);
    member_cmd->add_option("-m", modulus, "modulus")->required()->check(CLI::Range(2u, 65535u));
    member_cmd->add_option("--word", word_text, "word")->required();

    std::string check_name;
    auto*       quotient_cmd = app.add_subcommand("quotient", "congruence quotient theorems for T_n");
    quotient_cmd->add_option("--check", check_name, "alternating, even-vectors or product")
        ->required()
        ->check(CLI::IsMember({"alternating", "even-vectors", "product"}));
    quotient_cmd->add_option("-n", sys.n, "twin group index")->required();
    quotient_cmd->add_option("-m", modulus, "modulus")->required();
    quotient_cmd->add_option("--cap", cap, "element budget");

    unsigned second = 0;
    auto*    subgroup_cmd
        = app.add_subcommand("subgroup", "kernels of reduction mod m and mod k inside rho_mk(T_n)");
    subgroup_cmd->add_option("-n", sys.n, "twin group index")->required();
    subgroup_cmd->add_option("-m", modulus, "first modulus")->required();
    subgroup_cmd->add_option("-k", second, "second modulus")->required();
    subgroup_cmd->add_option("--cap", cap, "element budget");

    std::string map_name;
    std::string presentation_file;
    bool        tietze = false;
    auto*       abel_cmd = app.add_subcommand("abelianize", "abelianization of a kernel or presentation");
    add_system_options(abel_cmd, sys);
    abel_cmd->add_option("--map", map_name, "symmetric, modular, mod2, parity or trivial");
    abel_cmd->add_option("-m", modulus, "modulus of the modular map");
    abel_cmd->add_option("--presentation", presentation_file, "presentation file")
        ->check(CLI::ExistingFile);
    abel_cmd->add_flag("--tietze", tietze, "simplify before abelianizing");
    abel_cmd->add_option("--cap", cap, "element budget");

    bool  theta = false, cross = false;
    auto* holo_cmd = app.add_subcommand("holonomy", "holonomy representation and faithfulness");
    add_system_options(holo_cmd, sys);
    holo_cmd->add_option("--map", map_name, "symmetric, modular, mod2, parity or trivial");
    holo_cmd->add_option("-m", modulus, "modulus of the modular map");
    holo_cmd->add_flag("--theta", theta, "use the explicit matrices of T_n/T_n''");
    holo_cmd->add_flag("--cross-check", cross,
                       "compare those matrices with the conjugation action");
    holo_cmd->add_option("--cap", cap, "element budget");

    bool  rank_table = false;
    auto* perm_cmd   = app.add_subcommand("permutahedron", "face census and rank of PL_n");
    perm_cmd->add_option("-n", sys.n, "number of points");
    perm_cmd->add_flag("--table", rank_table, "ranks for n = 3..7");

    std::string suite;
    bool        timing = false;
    auto*       verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_flag("--timing", timing, "include elapsed seconds");

    std::vector<std::string> argv_store{"smallcox"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
      argv.push_back(a.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    auto fail = [&](std::string const& kind, std::string const& message, Json extra = {}) {
      err << "error: " << message << '\n';
      if (json) {
        Json record{{"error", kind}, {"message", message}};
        if (extra.is_object()) {
          record.update(extra);
        }
        out << record.dump() << '\n';
      }
    };

    try {
      Json record;
      int  status = 0;
      if (tits_cmd->parsed()) {
        CoxeterSystem s = make_system(sys);
        record["rank"]  = s.rank();
        record["small"] = is_small(s);
        if (!word_text.empty()) {
          Word w         = make_word(s, word_text);
          record["word"] = w;
          if (modulus) {
            record["modulus"] = modulus;
            record["matrix"]  = matrix_json(evaluate_mod(s, w, modulus));
          } else {
            record["matrix"] = matrix_json(evaluate(s, w));
          }
        } else {
          Json gens = Json::array();
          for (std::size_t k = 1; k <= s.rank(); ++k) {
            gens.push_back(modulus ? matrix_json(generator_matrix_mod(s, k, modulus))
                                   : matrix_json(generator_matrix(s, k)));
          }
          record["generators"] = gens;
        }
      } else if (image_cmd->parsed()) {
        CoxeterSystem     s = make_system(sys);
        FiniteMatrixGroup g = enumerate_image(s, modulus, cap);
        record["order"]     = g.order();
        if (!dump_file.empty()) {
          std::ofstream f(dump_file);
          f << format_group_dump(g);
          if (!f) {
            throw ValidationError("cannot write " + dump_file);
          }
        }
      } else if (member_cmd->parsed()) {
        CoxeterSystem s  = make_system(sys);
        record["member"] = congruence_member(s, make_word(s, word_text), modulus);
      } else if (quotient_cmd->parsed()) {
        QuotientCheck q = check_name == "alternating"    ? check_quotient_alternating(sys.n, modulus, cap)
                          : check_name == "even-vectors" ? check_quotient_even_vectors(sys.n, modulus, cap)
                                                         : check_quotient_product(sys.n, modulus, cap);
        record = Json{{"check", check_name},
                      {"passed", q.passed},
                      {"kernel_order", q.kernel_order},
                      {"image_order", q.image_order},
                      {"detail", q.detail}};
        status = q.passed ? 0 : 1;
      } else if (subgroup_cmd->parsed()) {
        auto c = product_generation_check(sys.n, modulus, second, cap);
        record = Json{{"passed", c.passed},
                      {"group_order", c.group_order},
                      {"even_order", c.even_order},
                      {"generated_order", c.generated_order}};
        status = c.passed ? 0 : 1;
      } else if (abel_cmd->parsed()) {
        Presentation pres;
        if (!presentation_file.empty()) {
          if (!map_name.empty() || !sys.family.empty() || !sys.matrix_file.empty()) {
            throw PreconditionError("--presentation excludes a system and a map");
          }
          pres                = parse_presentation(read_file(presentation_file));
          record["generators"] = pres.generators;
          record["relators"]  = pres.relators.size();
        } else {
          if (map_name.empty()) {
            throw PreconditionError("abelianize needs --map or --presentation");
          }
          CoxeterSystem     s   = make_system(sys);
          FiniteQuotientMap map = quotient_map(s, parse_quotient_kind(map_name), modulus);
          CosetTable        t   = coset_table(map, cap);
          pres                  = reidemeister_schreier(coxeter_presentation(s), t);
          record["index"]       = t.cosets();
          record["schreier_generators"] = pres.generators;
          record["relators"]            = pres.relators.size();
        }
        if (tietze) {
          pres                        = tietze_simplify(std::move(pres));
          record["tietze_generators"] = pres.generators;
          record["tietze_relators"]   = pres.relators.size();
        }
        record.update(invariants_json(abelian_invariants(pres)));
      } else if (holo_cmd->parsed()) {
        if (theta || cross) {
          if (theta && cross) {
            throw PreconditionError("choose one of --theta and --cross-check");
          }
          if (sys.n == 0 || !sys.family.empty() || !sys.matrix_file.empty()) {
            throw PreconditionError("--theta and --cross-check take only -n");
          }
          if (theta) {
            record = holonomy_json(theta_faithfulness(sys.n));
          } else {
            CrossCheck c = theta_cross_check(sys.n);
            record       = Json{{"n", sys.n},
                                {"passed", c.passed},
                                {"spans", c.spans},
                                {"mismatches", c.mismatches},
                                {"detail", c.detail}};
            status       = c.passed ? 0 : 1;
          }
        } else {
          if (map_name.empty()) {
            throw PreconditionError("holonomy needs --map, --theta or --cross-check");
          }
          CoxeterSystem s = make_system(sys);
          record          = holonomy_json(holonomy_via_conjugation(
              s, quotient_map(s, parse_quotient_kind(map_name), modulus), cap));
        }
      } else if (perm_cmd->parsed()) {
        if (rank_table) {
          Json ranks = Json::array();
          for (std::size_t n = 3; n <= 7; ++n) {
            ranks.push_back(Json{{"n", n}, {"rank", big(pl_rank(n))}});
          }
          record["ranks"] = ranks;
        } else {
          if (sys.n < 3) {
            throw PreconditionError("permutahedron needs -n >= 3 or --table");
          }
          FaceCensus c = sys.n <= 8 ? face_census(sys.n) : face_census_formula(sys.n);
          record       = Json{{"n", sys.n},
                              {"V", big(c.vertices)},
                              {"E", big(c.edges)},
                              {"F6", big(c.hexagons)},
                              {"F4", big(c.squares)},
                              {"chi", big(c.chi())},
                              {"rank", big(1 - c.chi())}};
        }
      } else if (verify_cmd->parsed()) {
        VerificationReport report = verify(suite);
        Json               claims = Json::array();
        for (auto const& c : report.claims) {
          Json j{{"id", c.id},
                 {"statement", c.statement},
                 {"expected", c.expected},
                 {"computed", c.computed},
                 {"pass", c.pass}};
          if (timing) {
            j["seconds"] = c.seconds;
          }
          claims.push_back(std::move(j));
        }
        std::size_t passed = static_cast<std::size_t>(std::count_if(
            report.claims.begin(), report.claims.end(), [](Claim const& c) { return c.pass; }));
        if (json) {
          record = Json{{"suite", suite},
                        {"passed", report.passed()},
                        {"claims_passed", passed},
                        {"claims_total", report.claims.size()},
                        {"claims", claims}};
        } else {
          for (auto const& c : report.claims) {
            out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.statement
                << "\n    expected " << c.expected << "\n    computed " << c.computed;
            if (timing) {
              out << " (" << c.seconds << " s)";
            }
            out << '\n';
          }
          record = Json{{"suite", suite},
                        {"passed", report.passed()},
                        {"claims_passed", passed},
                        {"claims_total", report.claims.size()}};
        }
        status = report.passed() ? 0 : 1;
      }
      emit(record, json, out);
      return status;
    } catch (BudgetExceeded const& e) {
      fail("budget", e.what(), Json{{"cap", e.cap()}, {"reached", e.reached()}});
      return 1;
    } catch (PreconditionError const& e) {
      fail("usage", e.what());
      return 2;
    } catch (ValidationError const& e) {
      fail("validation", e.what());
      return 1;
    } catch (TorsionError const& e) {
      fail("torsion", e.what());
      return 1;
    } catch (std::exception const& e) {
      fail("computation", e.what());
      return 1;
    }
  }

}  // namespace smallcox

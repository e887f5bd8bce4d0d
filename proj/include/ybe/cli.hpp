#ifndef YBE_CLI_HPP_
#define YBE_CLI_HPP_

// The ybe command-line front end.  run() takes its output streams as
// arguments so tests can drive it in-process.
//
// Exit status: 0 success, 1 verification failed / not isomorphic / oracle
// mismatch, 2 malformed input, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arith.hpp"
#include "brace.hpp"
#include "classify.hpp"
#include "cocyclic.hpp"
#include "error.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "perm.hpp"
#include "solution.hpp"

namespace ybe::cli {

  inline constexpr int kExitOk       = 0;
  inline constexpr int kExitFailed   = 1;
  inline constexpr int kExitMalformed = 2;
  inline constexpr int kExitResource = 3;

  //! Name of the environment variable overriding the oracle size cap.
  inline constexpr char const* kOracleCapVariable = "YBE_ORACLE_CAP";

  namespace detail {

    inline char const* flag(bool b) {
      return b ? "true" : "false";
    }

    inline SolutionDocument load(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParameterError("cannot open '" + path + "'");
      }
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      return parse_document(text);
    }

    // KParams recorded in a document's meta block, if complete.
    inline std::optional<KParams> params_of(SolutionDocument const& d) {
      if (!d.meta.family || !d.meta.t || !d.meta.a) {
        return std::nullopt;
      }
      KParams p{d.solution.size(), *d.meta.t, *d.meta.a,
                family_from_string(*d.meta.family)};
      p = validate(p);
      if (make_K(p) != d.solution) {
        throw ParameterError("meta block does not match the tables");
      }
      return p;
    }

    inline std::optional<Int> oracle_cap_from_env() {
      char const* v = std::getenv(kOracleCapVariable);
      if (v == nullptr || *v == '\0') {
        return std::nullopt;
      }
      char*              end = nullptr;
      unsigned long long cap = std::strtoull(v, &end, 10);
      if (*end != '\0' || cap == 0) {
        throw ParameterError(std::string(kOracleCapVariable)
                             + " must be a positive integer");
      }
      return cap;
    }

    inline int construct(std::ostream& out, Int n, Int t, Int a,
                         std::string const& family) {
      KParams const p = validate({n, t, a, family_from_string(family)});
      SolutionTable s = make_K(p);
      auto const    lvl = multipermutation_level(s);
      SolutionMeta  meta{to_string(p.family), p.t, p.a, std::nullopt};
      if (lvl) {
        meta.level = *lvl;
      }
      out << to_json(s, meta).dump() << '\n';
      return kExitOk;
    }

    inline int verify_file(std::ostream& out, std::string const& path) {
      auto const doc = load(path);
      auto const rep = verify(doc.solution);
      out << "non_degenerate=" << flag(rep.non_degenerate) << '\n'
          << "involutive=" << flag(rep.involutive) << '\n'
          << "braid=" << flag(rep.braid) << '\n';
      return rep.ok() ? kExitOk : kExitFailed;
    }

    inline int retract_file(std::ostream& out, std::string const& path,
                            unsigned steps) {
      auto const    doc     = load(path);
      SolutionTable current = doc.solution;
      std::vector<std::size_t> sizes = {current.size()};
      for (unsigned i = 0; i < steps; ++i) {
        current = retract(current);
        sizes.push_back(current.size());
      }
      auto j                    = to_json(current);
      j["meta"]["retract_sizes"] = sizes;
      out << j.dump() << '\n';
      return kExitOk;
    }

    inline int group_file(std::ostream& out, std::string const& path) {
      auto const      doc = load(path);
      PermGroup const g   = permutation_group(doc.solution);
      out << "order=" << g.order() << '\n'
          << "cyclic=" << flag(g.is_cyclic()) << '\n'
          << "transitive=" << flag(g.is_transitive()) << '\n'
          << "regular=" << flag(g.is_regular()) << '\n';
      return kExitOk;
    }

    inline int iso_files(std::ostream& out, std::string const& path1,
                         std::string const& path2, std::string const& method) {
      auto const d1 = load(path1);
      auto const d2 = load(path2);
      if (method == "brute") {
        auto const phi = isomorphic_bruteforce(d1.solution, d2.solution);
        if (!phi) {
          out << "non-isomorphic\n";
          return kExitFailed;
        }
        out << cycle_notation(*phi) << '\n';
        return kExitOk;
      }
      // formula: closed form on recorded parameters when both documents
      // carry them in the same family, canonical triples otherwise
      auto const p1 = params_of(d1);
      auto const p2 = params_of(d2);
      if (p1 && p2 && p1->n == p2->n && p1->t == p2->t
          && p1->family == p2->family) {
        auto const r = isomorphic_K(*p1, *p2);
        if (!r.isomorphic) {
          out << "non-isomorphic\n";
          return kExitFailed;
        }
        out << "isomorphic";
        if (r.witness) {
          out << " h=" << r.witness->h << " z=" << r.witness->z;
        }
        out << '\n';
        return kExitOk;
      }
      if (d1.solution.size() != d2.solution.size()) {
        out << "non-isomorphic\n";
        return kExitFailed;
      }
      auto const c1 = canonical_invariants(d1.solution);
      auto const c2 = canonical_invariants(d2.solution);
      if (c1 != c2) {
        out << "non-isomorphic\n";
        return kExitFailed;
      }
      out << "isomorphic " << to_string(c1) << '\n';
      return kExitOk;
    }

    inline int classify_file(std::ostream& out, std::string const& path) {
      auto const doc = load(path);
      auto const c   = canonical_invariants(doc.solution);
      out << "invariants=" << to_string(c) << '\n'
          << "socle_index=" << c.socle_index() << '\n';
      return kExitOk;
    }

    inline int enumerate_n(std::ostream& out, Int n, std::string const& format) {
      auto const rep = enumerate_all(n);
      if (format == "csv") {
        out << "n,t,a,socle_index,level\n";
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
          auto const& c = rep.classes[i];
          out << c.n << ',' << c.t << ',' << c.a << ',' << c.socle_index()
              << ',' << rep.levels[i] << '\n';
        }
        return kExitOk;
      }
      nlohmann::ordered_json j;
      j["n"]       = rep.n;
      j["total"]   = rep.total;
      j["classes"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        auto const&            c = rep.classes[i];
        nlohmann::ordered_json e;
        e["t"]           = c.t;
        e["a"]           = c.a;
        e["socle_index"] = c.socle_index();
        e["level"]       = rep.levels[i];
        j["classes"].push_back(std::move(e));
      }
      j["per_level"] = nlohmann::ordered_json::object();
      for (auto const& [lvl, cnt] : rep.per_level) {
        j["per_level"][std::to_string(lvl)] = cnt;
      }
      out << j.dump() << '\n';
      return kExitOk;
    }

    inline int count_n(std::ostream& out, Int n) {
      auto const rep = count_cocyclic(n);
      out << rep.total << '\n';
      for (auto const& [t, c] : rep.per_t) {
        out << "t=" << t << " count=" << c << '\n';
      }
      return kExitOk;
    }

    inline int table1_csv(std::ostream& out) {
      Table1 const             tbl = table1();
      std::vector<std::string> header = {"p"};
      for (unsigned k = tbl.k_min; k <= tbl.k_max; ++k) {
        header.push_back("k=" + std::to_string(k));
      }
      write_csv_row(out, header);
      for (std::size_t i = 0; i < tbl.primes.size(); ++i) {
        std::vector<Int> row = {tbl.primes[i]};
        row.insert(row.end(), tbl.counts[i].begin(), tbl.counts[i].end());
        write_csv_row(out, row);
      }
      return kExitOk;
    }

    inline int oracle_n(std::ostream& out, Int n, bool allow_slow) {
      OracleOptions opts;
      opts.allow_slow = allow_slow;
      if (auto cap = oracle_cap_from_env()) {
        opts.max_order = *cap;
      }
      auto const oracle = oracle_exhaustive_cyclic(n, opts);
      auto const en     = enumerate_all(n);
      auto const cmp    = compare_with_enumeration(oracle, en);
      out << "n=" << n << '\n'
          << "exponent_maps=" << oracle.leaves << '\n'
          << "solutions=" << oracle.survivors << '\n'
          << "oracle_classes=" << oracle.representatives.size() << '\n'
          << "enumerated_classes=" << en.total << '\n';
      for (std::size_t i = 0; i < oracle.representatives.size(); ++i) {
        out << "class " << i << ": size=" << oracle.class_sizes[i] << " -> ";
        if (auto j = cmp.oracle_to_enumeration[i]) {
          out << to_string(en.classes[*j]) << '\n';
        } else {
          out << "unmatched\n";
        }
      }
      out << "match=" << flag(cmp.match) << '\n';
      return cmp.match ? kExitOk : kExitFailed;
    }

    // Levels of K(n, t, 1) and of the solution associated with B_t(n), for
    // every t | n admitted by the standard family.
    inline int levels_n(std::ostream& out, Int n) {
      if (n == 0 || n > kMaxTableOrder) {
        throw ParameterError("n out of range");
      }
      FactoredInt const nf(n);
      out << "t,solution_level,brace_solution_level\n";
      for (Int t : divisors(nf)) {
        if (!is_nilpotent(t, nf) || (n % 4 == 0 && t % 4 != 0)) {
          continue;
        }
        auto const k = multipermutation_level(make_K({n, t, 1}));
        auto const b = multipermutation_level(associated_solution(make_Bt(n, t)));
        out << t << ',' << (k ? std::to_string(*k) : "none") << ','
            << (b ? std::to_string(*b) : "none") << '\n';
      }
      return kExitOk;
    }

    inline int refute_n(std::ostream& out, Int n) {
      auto const             r = refute_rump(n);
      nlohmann::ordered_json j;
      j["n"]             = r.n;
      j["predicted"]     = r.predicted;
      j["actual"]        = r.actual;
      j["socle_indices"] = r.socle_indices;
      j["message"]       = r.message;
      if (r.counterexample) {
        auto const&            c = *r.counterexample;
        nlohmann::ordered_json ce;
        ce["socle_index"]    = c.first.socle_index();
        ce["first"]          = {c.first.n, c.first.t, c.first.a};
        ce["second"]         = {c.second.n, c.second.t, c.second.a};
        ce["retract_sizes"]  = {c.first_retract_size, c.second_retract_size};
        ce["certificate"]    = to_string(c.certificate);
        ce["non_isomorphic"] = c.non_isomorphic;
        ce["first_solution"]  = to_json(c.first_table);
        ce["second_solution"] = to_json(c.second_table);
        j["counterexample"]   = std::move(ce);
      }
      out << j.dump() << '\n';
      return kExitOk;
    }

  }  // namespace detail

  //! Parses argv and runs one subcommand.  Never throws.
  inline int run(int argc, char const* const* argv, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Cocyclic solutions of the Yang-Baxter equation", "ybe"};
    app.require_subcommand(1);

    Int         n = 0, t = 0, a = 1;
    unsigned    steps = 1;
    bool        allow_slow = false;
    std::string family = "standard", file, file2, method = "brute",
                format = "json";

    auto* construct = app.add_subcommand("construct", "build K(n, t, a)");
    construct->add_option("--n", n, "order")->required();
    construct->add_option("--t", t, "nilpotent parameter")->required();
    construct->add_option("--a", a, "unit parameter")->required();
    construct->add_option("--family", family, "standard, tilde4 or fourn")
        ->check(CLI::IsMember({"standard", "tilde4", "fourn"}));

    auto* verify_cmd = app.add_subcommand("verify", "check the solution axioms");
    verify_cmd->add_option("file", file)->required();

    auto* retract_cmd = app.add_subcommand("retract", "iterated retraction");
    retract_cmd->add_option("file", file)->required();
    retract_cmd->add_option("--steps", steps, "number of retractions");

    auto* group = app.add_subcommand("group", "permutation group summary");
    group->add_option("file", file)->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->add_option("--method", method)->check(
        CLI::IsMember({"brute", "formula"}));

    auto* classify = app.add_subcommand("classify", "canonical (n, t, a)");
    classify->add_option("file", file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "all classes of order n");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--format", format)->check(
        CLI::IsMember({"json", "csv"}));

    auto* count = app.add_subcommand("count", "number of classes of order n");
    count->add_option("--n", n)->required();

    auto* table = app.add_subcommand("table1", "prime power counts as CSV");

    auto* oracle = app.add_subcommand("oracle", "exhaustive cross-check");
    oracle->add_option("--n", n)->required();
    oracle->add_flag("--allow-slow", allow_slow, "admit n = 9");

    auto* refute = app.add_subcommand("refute", "order/socle counterexample");
    refute->add_option("--n", n)->required();

    auto* levels = app.add_subcommand(
        "levels", "levels of K(n, t, 1) and of the brace solution of B_t(n)");
    levels->add_option("--n", n)->required();

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitMalformed;
    }

    try {
      if (construct->parsed()) {
        return detail::construct(out, n, t, a, family);
      } else if (verify_cmd->parsed()) {
        return detail::verify_file(out, file);
      } else if (retract_cmd->parsed()) {
        return detail::retract_file(out, file, steps);
      } else if (group->parsed()) {
        return detail::group_file(out, file);
      } else if (iso->parsed()) {
        return detail::iso_files(out, file, file2, method);
      } else if (classify->parsed()) {
        return detail::classify_file(out, file);
      } else if (enumerate->parsed()) {
        return detail::enumerate_n(out, n, format);
      } else if (count->parsed()) {
        return detail::count_n(out, n);
      } else if (table->parsed()) {
        return detail::table1_csv(out);
      } else if (oracle->parsed()) {
        return detail::oracle_n(out, n, allow_slow);
      } else if (levels->parsed()) {
        return detail::levels_n(out, n);
      } else if (refute->parsed()) {
        return detail::refute_n(out, n);
      }
    } catch (ResourceError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitResource;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitMalformed;
    }
    return kExitMalformed;
  }

}  // namespace ybe::cli

#endif  // YBE_CLI_HPP_

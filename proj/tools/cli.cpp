#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "curvepi/abelian.hpp"
#include "curvepi/catalog.hpp"
#include "curvepi/classify.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/geometry.hpp"
#include "curvepi/schreier.hpp"
#include "curvepi/simplify.hpp"
#include "curvepi/verify.hpp"

namespace curvepi::cli {

  namespace {

    // Bad input files and malformed arguments map to the usage exit code.
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream file(path);
      if (!file) {
        throw UsageError("cannot read '" + path + "'");
      }
      std::ostringstream buf;
      buf << file.rdbuf();
      return buf.str();
    }

    bool is_inline(std::string const& arg) {
      return arg.starts_with("<") || arg.starts_with("⟨");
    }

    Presentation load_presentation(std::string const& arg, std::istream& in) {
      if (arg.empty()) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_presentation(buf.str());
      }
      return parse_presentation(is_inline(arg) ? arg : read_file(arg));
    }

    nlohmann::json load_json(std::string const& path) {
      try {
        return nlohmann::json::parse(read_file(path));
      } catch (nlohmann::json::exception const& e) {
        throw UsageError(path + ": " + e.what());
      }
    }

    EnumLimits default_limits() {
      EnumLimits limits;
      if (char const* env = std::getenv("CURVEPI_MAX_COSETS")) {
        try {
          limits.max_cosets = std::stoul(env);
        } catch (std::exception const&) {
          throw UsageError("CURVEPI_MAX_COSETS must be a positive integer");
        }
      }
      return limits;
    }

    void print(std::ostream& out, nlohmann::json const& j) {
      out << j.dump(2) << '\n';
    }

    int report_overflow(Overflow const& o, bool json, std::ostream& out, std::ostream& err) {
      if (json) {
        print(out, {{"status", "overflow"},
                    {"limit", o.limit},
                    {"live", o.live},
                    {"defined", o.defined},
                    {"reason", o.reason}});
      }
      err << "overflow: " << o.reason << " (limit " << o.limit << ", " << o.live << " live cosets)\n";
      return kDomainFailure;
    }

    struct Options {
      std::string presentation;
      std::string subgroup;
      std::string quotient_by;
      std::string tag;
      std::string file;
      std::string only;
      std::size_t max_cosets = 0;
      bool        json       = false;
      bool        simplify   = false;
      bool        timings    = false;
    };

    EnumLimits limits_from(Options const& o) {
      EnumLimits limits = default_limits();
      if (o.max_cosets != 0) {
        limits.max_cosets = o.max_cosets;
      }
      return limits;
    }

    std::vector<Word> words(std::string const& text, Presentation const& p) {
      return text.empty() ? std::vector<Word>{} : parse_word_list(text, p.generators());
    }

    int run_ab(Options const& o, std::istream& in, std::ostream& out) {
      Presentation const     p   = load_presentation(o.presentation, in);
      InvariantFactors const inv = abelian_invariants(p);
      if (o.json) {
        print(out, {{"abelianization", to_json(inv)}, {"text", to_string(inv)}});
      } else {
        out << to_string(inv) << '\n';
      }
      return kSuccess;
    }

    int run_tc(Options const& o, std::istream& in, std::ostream& out, std::ostream& err) {
      Presentation p = load_presentation(o.presentation, in);
      p              = p.with_relators(words(o.quotient_by, p));
      auto const subgroup = words(o.subgroup, p);
      auto       result   = todd_coxeter(p, subgroup, limits_from(o));
      if (auto const* overflow = std::get_if<Overflow>(&result)) {
        return report_overflow(*overflow, o.json, out, err);
      }
      auto const& table = std::get<CosetTable>(result);
      if (o.json) {
        print(out, {{"status", "ok"}, {"index", table.size()}, {"table", to_json(table, p)}});
      } else {
        out << table.size() << '\n';
      }
      return kSuccess;
    }

    int run_rs(Options const& o, std::istream& in, std::ostream& out, std::ostream& err) {
      Presentation const p        = load_presentation(o.presentation, in);
      auto const         subgroup = words(o.subgroup, p);
      auto               result   = todd_coxeter(p, subgroup, limits_from(o));
      if (auto const* overflow = std::get_if<Overflow>(&result)) {
        return report_overflow(*overflow, o.json, out, err);
      }
      auto const&  table = std::get<CosetTable>(result);
      Presentation h     = subgroup_presentation(p, table);
      if (o.simplify) {
        h = simplify(h);
      }
      if (o.json) {
        nlohmann::json j{{"status", "ok"}, {"index", table.size()}};
        to_json(j["presentation"], h);
        j["abelianization"] = to_json(abelian_invariants(h));
        print(out, j);
      } else {
        out << format_presentation(h) << '\n';
      }
      return kSuccess;
    }

    int run_catalog(Options const& o, std::ostream& out) {
      GroupTag const     tag = parse_tag(o.tag);
      Presentation const p   = build(tag);
      if (o.json) {
        nlohmann::json j{{"tag", to_json(tag)}};
        to_json(j["presentation"], p);
        j["abelianization"] = to_json(abelian_invariants(p));
        print(out, j);
      } else {
        out << format_presentation(p) << '\n';
      }
      return kSuccess;
    }

    int run_blowup(Options const& o, std::ostream& out) {
      BlowUpScript const script = blow_up_script_from_json(load_json(o.file));
      ScriptRun const    run    = run_script(script);
      if (o.json) {
        nlohmann::json j{{"name", script.name}, {"ledger", to_json(run.final)}};
        j["nori"]       = run.nori ? to_json(*run.nori) : nlohmann::json();
        j["unresolved"] = run.unresolved.empty() ? nlohmann::json() : nlohmann::json(run.unresolved);
        print(out, j);
        return kSuccess;
      }
      for (auto const& c : run.final.components()) {
        if (!c.exceptional) {
          out << c.id << ": C.C = " << c.self_intersection << ", nodes " << c.nodes << ", cusps " << c.cusps
              << '\n';
        }
      }
      out << "exceptional divisors: " << run.final.exceptional_divisors() << '\n';
      if (!run.nori) {
        out << "Nori check: unresolved point " << run.unresolved << '\n';
        return kSuccess;
      }
      for (auto const& c : run.nori->components) {
        out << "Nori " << c.id << ": " << c.self_intersection << (c.pass ? " > " : " <= ") << c.two_r << '\n';
      }
      out << "Nori check: " << (run.nori->pass ? "pass" : "fail") << '\n';
      return kSuccess;
    }

    int run_classify(Options const& o, std::ostream& out, std::ostream& err) {
      auto const           ct     = load_json(o.file).get<CombinatorialType>();
      Classification const result = classify(ct);
      if (auto const* entry = std::get_if<ClassificationEntry>(&result)) {
        if (o.json) {
          print(out, to_json(*entry));
        } else {
          out << summary(*entry) << '\n';
        }
        return kSuccess;
      }
      auto const& nc = std::get<NotCovered>(result);
      if (o.json) {
        print(out, to_json(nc));
      } else {
        out << "not covered: " << nc.key << '\n';
        for (auto const& c : nc.candidates) {
          out << "  candidate: " << c << '\n';
        }
      }
      err << "not covered: " << nc.reason << '\n';
      return kDomainFailure;
    }

    int run_verify(Options const& o, std::ostream& out) {
      SuiteOptions options;
      options.limits = limits_from(o);
      std::stringstream only(o.only);
      for (std::string id; std::getline(only, id, ',');) {
        if (!id.empty()) {
          options.only.push_back(id);
        }
      }
      auto const reports = run_suite(options);
      if (o.json) {
        print(out, to_json(reports, o.timings));
      } else {
        out << format_reports(reports, o.timings);
      }
      return all_passed(reports) ? kSuccess : kDomainFailure;
    }

  }  // namespace

  int run_cli(int argc, char const* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fundamental groups of plane curve complements of degree at most 5", "curvepi"};
    app.require_subcommand(1);
    Options o;

    auto* ab = app.add_subcommand("ab", "Abelian invariants of a presentation");
    ab->add_option("presentation", o.presentation, "Inline presentation or file; stdin if omitted");
    ab->add_flag("--json", o.json, "JSON output");

    auto* tc = app.add_subcommand("tc", "Coset enumeration; prints the index");
    tc->add_option("presentation", o.presentation, "Inline presentation or file; stdin if omitted");
    tc->add_option("--subgroup", o.subgroup, "Comma-separated subgroup generators");
    tc->add_option("--quotient-by", o.quotient_by, "Comma-separated extra relators");
    tc->add_option("--max-cosets", o.max_cosets, "Coset budget")->check(CLI::PositiveNumber);
    tc->add_flag("--json", o.json, "JSON output with the coset table");

    auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
    rs->add_option("presentation", o.presentation, "Inline presentation or file; stdin if omitted");
    rs->add_option("--subgroup", o.subgroup, "Comma-separated subgroup generators")->required();
    rs->add_option("--max-cosets", o.max_cosets, "Coset budget")->check(CLI::PositiveNumber);
    rs->add_flag("--simplify", o.simplify, "Apply Tietze simplification");
    rs->add_flag("--json", o.json, "JSON output");

    auto* catalog = app.add_subcommand("catalog", "Presentation of a catalog group tag");
    catalog->add_option("tag", o.tag, "Tag such as toric:3,4, artin:333, quintic:C4_3A2")->required();
    catalog->add_flag("--json", o.json, "JSON output");

    auto* blowup = app.add_subcommand("blowup", "Replay a blow-up script");
    blowup->add_option("--script", o.file, "Script JSON file")->required();
    blowup->add_flag("--json", o.json, "JSON output");

    auto* cls = app.add_subcommand("classify", "Classify a combinatorial type");
    cls->add_option("--type", o.file, "Combinatorial type JSON file")->required();
    cls->add_flag("--json", o.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--only", o.only, "Comma-separated lemma ids, e.g. V1,V5");
    verify->add_option("--budget", o.max_cosets, "Coset budget per enumeration")->check(CLI::PositiveNumber);
    verify->add_flag("--json", o.json, "JSON report");
    verify->add_flag("--timings", o.timings, "Include elapsed times");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kUsageError;
    }

    try {
      if (ab->parsed()) {
        return run_ab(o, in, out);
      }
      if (tc->parsed()) {
        return run_tc(o, in, out, err);
      }
      if (rs->parsed()) {
        return run_rs(o, in, out, err);
      }
      if (catalog->parsed()) {
        return run_catalog(o, out);
      }
      if (blowup->parsed()) {
        return run_blowup(o, out);
      }
      if (cls->parsed()) {
        return run_classify(o, out, err);
      }
      return run_verify(o, out);
    } catch (nlohmann::json::exception const& e) {
      err << "error: malformed input: " << e.what() << '\n';
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
    }
    return kUsageError;
  }

}  // namespace curvepi::cli

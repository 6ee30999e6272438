// bhcalc: command-line front end for the Hecke operator and orbit library.
//
// Exit codes: 0 ok, 1 a verification failed, 2 usage error, 3 math error.

#include "bh/besselcalc.hpp"
#include "bh/error.hpp"
#include "bh/orbitcomb.hpp"
#include "bh/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bh;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec parse_ints(const std::string& s, char sep, const char* what) {
  Vec v;
  if (s.empty()) return v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw UsageError(std::string("bad ") + what + " '" + s + "'");
    v.push_back(x);
  }
  return v;
}

enum class Fmt { text, json, latex };

Fmt parse_fmt(const std::string& s) {
  if (s == "text") return Fmt::text;
  if (s == "json") return Fmt::json;
  if (s == "latex") return Fmt::latex;
  throw UsageError("unknown format '" + s + "' (text, json, latex)");
}

void log_reading() { std::cerr << "omega reading: " << reading_name(selected_reading()) << "\n"; }

void emit_value(const RationalFunc& f, int rank, Fmt fmt) {
  switch (fmt) {
    case Fmt::text: {
      std::string t = to_text(f);
      if (t.find("xi") != std::string::npos) std::cout << "# xi_i = x_i^(1/2)\n";
      std::cout << t << "\n";
      break;
    }
    case Fmt::latex: std::cout << to_latex(f) << "\n"; break;
    case Fmt::json: {
      json j = to_json(f, rank);
      j["text"] = to_text(f);
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
}

// [2^2,1^2] style, as in the orbit tables.
std::string latex_partition(const Partition& p) {
  std::string s = "[";
  for (size_t k = 0; k < p.parts.size();) {
    size_t e = k;
    while (e < p.parts.size() && p.parts[e] == p.parts[k]) ++e;
    if (k) s += ",";
    s += std::to_string(p.parts[k]);
    if (e - k > 1) s += "^{" + std::to_string(e - k) + "}";
    k = e;
  }
  return s + "]";
}

std::string algebra_latex(Algebra a, int N) {
  return a == Algebra::C ? "\\Sp(" + std::to_string(N) + ")" : "\\SO(" + std::to_string(N) + ")";
}

int report(const std::vector<CheckResult>& rs, Fmt fmt) {
  bool ok = true;
  for (auto& r : rs) ok = ok && r.pass;
  for (auto& r : rs)
    std::cerr << std::fixed << std::setprecision(3) << r.seconds << "s  " << r.suite << " / "
              << r.name << "\n";
  if (fmt == Fmt::json) {
    json arr = json::array();
    for (auto& r : rs)
      arr.push_back({{"suite", r.suite}, {"identity", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << json{{"results", arr}, {"pass", ok}}.dump(2) << "\n";
  } else if (fmt == Fmt::latex) {
    std::cout << "\\begin{tabular}{|l|l|l|}\n\\hline\nsuite & identity & result \\\\\n\\hline\n";
    for (auto& r : rs)
      std::cout << r.suite << " & " << r.name << " & " << (r.pass ? "PASS" : "FAIL")
                << " \\\\\n\\hline\n";
    std::cout << "\\end{tabular}\n";
  } else {
    size_t w1 = 5, w2 = 8;
    for (auto& r : rs) {
      w1 = std::max(w1, r.suite.size());
      w2 = std::max(w2, r.name.size());
    }
    std::cout << std::left << std::setw(int(w1) + 2) << "suite" << std::setw(int(w2) + 2)
              << "identity" << "result\n";
    for (auto& r : rs) {
      std::cout << std::left << std::setw(int(w1) + 2) << r.suite << std::setw(int(w2) + 2)
                << r.name << (r.pass ? "PASS" : "FAIL") << "\n";
      if (!r.pass) std::cout << "    " << r.detail << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke operator calculus and orbit combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string fmt_s;
  if (const char* env = std::getenv("BHCALC_FORMAT")) fmt_s = env;
  if (fmt_s.empty()) fmt_s = "text";
  app.add_option("--format", fmt_s, "text, json or latex (default: $BHCALC_FORMAT or text)");

  int rank = 2;
  std::string lambda_s, char_s = "eps", word_s, reading_s, norm_s = "raw";

  auto* sph = app.add_subcommand("spherical", "closed and summed spherical values");
  sph->add_option("--rank", rank)->required();
  sph->add_option("--lambda", lambda_s)->required();
  sph->add_option("--char", char_s);
  sph->add_option("--norm", norm_s, "raw or measure");
  sph->add_option("--reading", reading_s, "Omega reading R1, R2 or R3 (default: selected)");

  auto* iw = app.add_subcommand("iwahori", "value on an Iwahori-fixed vector");
  iw->add_option("--rank", rank)->required();
  iw->add_option("--lambda", lambda_s)->required();
  iw->add_option("--word", word_s, "dash-separated simple indices, e.g. 1-2-1");

  bool unnormalized = false;
  auto* sh = app.add_subcommand("shalika", "sigma value of rank 2");
  sh->add_option("--lambda", lambda_s)->required();
  sh->add_flag("--unnormalized", unnormalized);

  std::string group_s = "C2";
  bool prefactor = false;
  auto* wo = app.add_subcommand("wo", "orthogonal Whittaker value");
  wo->add_option("--lambda", lambda_s)->required();
  wo->add_option("--group", group_s, "C2 or D3");
  wo->add_flag("--prefactor", prefactor, "multiply by z1^(-2 l1)");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite);
  bool list = false;
  ver->add_flag("--list", list, "print suite names");

  std::string alg_s;
  int N = 0;
  bool special = false, paired = false;
  auto* orb = app.add_subcommand("orbits", "nilpotent orbits by partition");
  orb->add_option("--algebra", alg_s, "B or C");
  orb->add_option("--N", N)->required();
  orb->add_flag("--special", special, "special orbits only");
  orb->add_flag("--paired", paired, "specials next to their partners of the other type");

  std::string fixture_s;
  auto* pipe = app.add_subcommand("pipeline", "orbit attached to a linear character");
  pipe->add_option("--char", char_s)->required();
  pipe->add_option("--rank", rank)->required();
  pipe->add_option("--fixture", fixture_s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    Fmt fmt = parse_fmt(fmt_s);
    if (sph->parsed()) {
      SphericalQuery q{rank, parse_ints(lambda_s, ',', "lambda"), HeckeChar::by_name(char_s)};
      if (norm_s == "measure")
        q.norm = Normalization::measure_normalized;
      else if (norm_s != "raw")
        throw UsageError("--norm must be raw or measure");
      OmegaReading rd;
      if (reading_s.empty()) {
        rd = selected_reading();
      } else {
        auto r = reading_by_name(reading_s);
        if (!r) throw UsageError("unknown reading '" + reading_s + "'");
        rd = *r;
      }
      std::cerr << "omega reading: " << reading_name(rd) << "\n";
      RationalFunc sum = spherical_sum(q);
      std::optional<RationalFunc> closed;
      if (q.chr.name == "eps") closed = spherical_closed(q, rd);
      bool equal = closed && equals_exact(*closed, sum);
      if (fmt == Fmt::json) {
        json j;
        j["rank"] = rank;
        j["lambda"] = q.lambda;
        j["char"] = q.chr.name;
        j["reading"] = reading_name(rd);
        j["closed_form"] = closed ? json(to_json(*closed, rank)) : json(nullptr);
        j["sum_form"] = to_json(sum, rank);
        j["text"] = to_text(sum);
        j["equal"] = closed ? json(equal) : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        emit_value(sum, rank, fmt);
      }
      if (closed && !equal) {
        std::cerr << "closed form differs from the sum: " << to_text(*closed) << "\n";
        rc = 1;
      }
    } else if (iw->parsed()) {
      RootDatum d = build_root_datum(Family::C, rank);
      Vec word = word_s == "e" ? Vec{} : parse_ints(word_s, '-', "word");
      for (int i : word)
        if (i < 1 || i > rank) throw UsageError("word letter out of range");
      WeylGroup G = enumerate_weyl(d);
      SignedPerm g = word_product(d, word);
      if (length_of(d, g) != int(word.size())) throw MathError("word", "word is not reduced");
      WeylElt w = G.elts[G.index_of(g)];
      w.word = word;  // evaluate along the word as given
      emit_value(iwahori_value(d, parse_ints(lambda_s, ',', "lambda"), w), rank, fmt);
    } else if (sh->parsed()) {
      log_reading();
      Vec lam = parse_ints(lambda_s, ',', "lambda");
      emit_value(unnormalized ? shalika_sigma_unnormalized(lam) : shalika_sigma_value(lam), 2, fmt);
    } else if (wo->parsed()) {
      WoOptions o;
      if (group_s == "D3")
        o.group = WoGroup::D3;
      else if (group_s != "C2")
        throw UsageError("--group must be C2 or D3");
      o.prefactor = prefactor;
      emit_value(wo_value(parse_ints(lambda_s, ',', "lambda"), o), 2, fmt);
    } else if (ver->parsed()) {
      if (list) {
        for (auto& n : suite_names()) std::cout << n << "\n";
      } else {
        if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
        if (suite == "all" || suite == "alternator-identity" || suite == "spherical-crosscheck" ||
            suite == "shalika-wo" || suite == "dual-parameters")
          log_reading();
        rc = report(run_suite(suite), fmt);
      }
    } else if (orb->parsed()) {
      Algebra a;
      if (alg_s.empty()) alg_s = N % 2 ? "B" : "C";
      if (alg_s == "B")
        a = Algebra::B;
      else if (alg_s == "C")
        a = Algebra::C;
      else
        throw UsageError("--algebra must be B or C");
      auto os = special || paired ? special_orbits(a, N) : enumerate_orbits(a, N);
      std::vector<std::pair<Partition, Partition>> pairs;
      if (paired) {
        Algebra b = a == Algebra::C ? Algebra::B : Algebra::C;
        int M = a == Algebra::C ? N + 1 : N - 1;
        auto m = a == Algebra::C ? beta_match(os, special_orbits(b, M))
                                 : beta_match(special_orbits(b, M), os);
        for (auto& [g, lg] : m) pairs.push_back(a == Algebra::C ? std::pair{g, lg} : std::pair{lg, g});
      }
      if (fmt == Fmt::json) {
        json arr = json::array();
        for (size_t k = 0; k < os.size(); ++k) {
          json e{{"partition", os[k].p.parts}, {"special", is_special(os[k])}};
          if (a == Algebra::C) e["component_exponent"] = component_group(os[k]);
          if (paired) e["partner"] = pairs[k].second.parts;
          arr.push_back(e);
        }
        std::cout << json{{"algebra", alg_s}, {"N", N}, {"orbits", arr}}.dump(2) << "\n";
      } else if (fmt == Fmt::latex) {
        Algebra b = a == Algebra::C ? Algebra::B : Algebra::C;
        int M = a == Algebra::C ? N + 1 : N - 1;
        std::cout << (paired ? "\\begin{tabular}{|l|l|}\n\\hline\n" : "\\begin{tabular}{|l|}\n\\hline\n");
        std::cout << "$" << algebra_latex(a, N) << "$";
        if (paired) std::cout << " & $" << algebra_latex(b, M) << "$";
        std::cout << " \\\\\n\\hline\n";
        for (size_t k = 0; k < os.size(); ++k) {
          std::cout << "$" << latex_partition(os[k].p) << "$";
          if (paired) std::cout << " & $" << latex_partition(pairs[k].second) << "$";
          std::cout << " \\\\\n\\hline\n";
        }
        std::cout << "\\end{tabular}\n";
      } else {
        for (size_t k = 0; k < os.size(); ++k) {
          std::cout << os[k].p.str();
          if (paired) std::cout << "  " << pairs[k].second.str();
          std::cout << "\n";
        }
      }
    } else if (pipe->parsed()) {
      SpringerFixture fx = load_fixture(fixture_s.empty() ? default_fixture_path() : fixture_s);
      PipelineTrace t = conjecture_pipeline(HeckeChar::by_name(char_s), rank, fx);
      if (fmt == Fmt::json)
        std::cout << json{{"char", char_s}, {"rank", rank}, {"springer", t.springer.parts},
                          {"dual", t.dual.parts}, {"orbit", t.result.parts}}
                         .dump(2)
                  << "\n";
      else if (fmt == Fmt::latex)
        std::cout << "$" << latex_partition(t.result) << "$\n";
      else
        std::cout << t.result.str() << "\n";
      std::cerr << "trace: " << t.springer.str() << " -> " << t.dual.str() << " -> "
                << t.result.str() << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == "usage" ? 2 : 3;
  }
  std::cerr << "time: " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
            << "s\n";
  return rc;
}

// Command-line front end for the library: Hilbert series, generic rank
// trials, map-family combinatorics, and the braid check.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qalg/io.hpp"
#include "qalg/ybe.hpp"

using namespace qalg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_series(const std::string& label, const TruncatedSeries& s, bool as_json) {
  if (as_json) {
    json doc{{label, series_to_json(s)}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << label << ": " << s.str() << "\n";
  }
}

int run_hilbert(const std::string& input, size_t degree, const std::string& method,
                bool as_json) {
  auto any = parse_presentation(read_file(input));
  json out;
  std::visit(
      [&](const auto& pres) {
        using F = std::decay_t<decltype(pres.field)>;
        if (method == "complete" || method == "both") {
          auto res = hilbert_of_presentation(pres, degree);
          if (as_json) {
            out["complete"] = series_to_json(res.series);
            out["certified"] = res.certified;
          } else {
            std::cout << "completion: " << res.series.str()
                      << (res.certified ? "" : " (uncertified)") << "\n";
          }
        }
        if (method == "rank" || method == "both") {
          if constexpr (std::is_same_v<F, PrimeField>) {
            auto dims = graded_dims_by_rank(pres, degree);
            if (as_json)
              out["rank"] = series_to_json(dims);
            else
              std::cout << "rank method: " << dims.str() << "\n";
          } else {
            throw ValidationError("the rank method needs a prime field presentation");
          }
        }
      },
      any);
  if (as_json) std::cout << out.dump() << "\n";
  return 0;
}

int run_anick(size_t n, size_t degree, uint32_t prime, size_t trials, uint64_t seed,
              bool as_json) {
  auto bound = anick_bound(static_cast<long long>(n), degree);
  auto rep = verify_anick(n, degree, prime, trials, seed);
  if (as_json) {
    json out{{"n", n},
             {"prime", prime},
             {"seed", seed},
             {"bound", series_to_json(bound)},
             {"attained", rep.attained},
             {"first_attaining", rep.first_attaining},
             {"trials_run", rep.trial_dims.size()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "bound: " << bound.str() << "\n";
    if (rep.attained)
      std::cout << "attained on trial " << rep.first_attaining << " of " << trials << "\n";
    else
      std::cout << "not attained in " << trials << " trials\n";
  }
  return rep.attained ? 0 : 1;
}

int run_rit_check(const std::string& maps, bool as_json) {
  auto fam = parse_sigma(maps);
  auto v = grsig_check(fam);
  bool ps = pair_set_condition(fam);
  if (as_json) {
    json out{{"maps", format_sigma(fam)}, {"grsig", v.holds}, {"pair_set", ps}};
    json fails = json::array();
    for (const auto& f : v.failures) fails.push_back({{"i", f[0]}, {"k", f[1]}, {"j", f[2]}});
    out["failures"] = fails;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "grsig: " << (v.holds ? "holds" : "fails") << "\n";
    std::cout << "pair condition: " << (ps ? "holds" : "fails") << "\n";
    for (const auto& f : v.failures)
      std::cout << "  fails for colors (" << f[0] << "," << f[1] << ") at point " << f[2] << "\n";
  }
  return v.holds ? 0 : 1;
}

int run_rit_decompose(const std::string& maps, bool as_json) {
  auto fam = parse_sigma(maps);
  if (fam.m != 2) throw ValidationError("decompose needs exactly two maps");
  auto d = decompose_pair(fam.tables[0], fam.tables[1]);
  auto list = [](const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
  };
  if (as_json) {
    json out{{"valid", d.valid}, {"Y0", list(d.Y0)},   {"Ytilde0", list(d.Ytilde0)},
             {"P", list(d.P)},   {"Z", list(d.Z)}};
    json pairs = json::array();
    for (auto [a, b] : d.pairs) pairs.push_back({a, b});
    out["pairs"] = pairs;
    json blocks = json::array();
    for (const auto& blk : d.blocks)
      blocks.push_back({{"points", list(blk.points)}, {"targets", {blk.targets[0], blk.targets[1]}}});
    out["blocks"] = blocks;
    std::cout << out.dump() << "\n";
  } else {
    auto show = [](const char* name, const std::vector<int>& v) {
      std::cout << name << ": {";
      for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
      std::cout << "}\n";
    };
    show("Y0", d.Y0);
    show("Ytilde0", d.Ytilde0);
    show("P", d.P);
    show("Z", d.Z);
    for (auto [a, b] : d.pairs) std::cout << "pair: (" << a << "," << b << ")\n";
    for (const auto& blk : d.blocks) {
      std::cout << "block {";
      for (size_t i = 0; i < blk.points.size(); ++i)
        std::cout << (i ? "," : "") << blk.points[i];
      std::cout << "} -> (" << blk.targets[0] << "," << blk.targets[1] << ")\n";
    }
    std::cout << "structure: " << (d.valid ? "valid" : "invalid") << "\n";
  }
  return d.valid ? 0 : 1;
}

int run_rit_classify(size_t m, size_t n, size_t degree, bool as_json) {
  auto classes = classify(m, n, degree);
  if (as_json) {
    json out = json::array();
    for (const auto& c : classes)
      out.push_back({{"representative", format_sigma(c.representative)},
                     {"size", c.size},
                     {"maximal", c.maximal},
                     {"hilbert", series_to_json(c.hilbert)}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << classes.size() << " classes\n";
    for (const auto& c : classes)
      std::cout << "  " << format_sigma(c.representative) << "  size " << c.size
                << (c.maximal ? "  maximal" : "") << "  series " << c.hilbert.str() << "\n";
  }
  return 0;
}

int run_omega_check(const std::string& maps, bool as_json) {
  auto fam = parse_sigma(maps);
  OmegaFailure fail{};
  auto s = omega_structure(fam, &fail);
  if (as_json) {
    json out{{"maps", format_sigma(fam)}, {"represents", s.has_value()}};
    if (s) {
      json classes = json::array();
      for (const auto& cls : s->classes) {
        json pts = json::array(), tgt = json::array();
        for (int p : cls.points) pts.push_back(p);
        for (int t : cls.targets) tgt.push_back(t);
        classes.push_back({{"points", pts}, {"targets", tgt}});
      }
      out["classes"] = classes;
    } else {
      out["failure"] = {{"i", fail.i}, {"k", fail.k}, {"j", fail.point}};
    }
    std::cout << out.dump() << "\n";
  } else if (s) {
    std::cout << "represents the semigroup; " << s->classes.size() << " classes\n";
    for (const auto& cls : s->classes) {
      std::cout << "  {";
      for (size_t i = 0; i < cls.points.size(); ++i)
        std::cout << (i ? "," : "") << cls.points[i];
      std::cout << "} -> (";
      for (size_t i = 0; i < cls.targets.size(); ++i)
        std::cout << (i ? "," : "") << cls.targets[i];
      std::cout << ")\n";
    }
  } else {
    std::cout << "not a representation: sigma_" << fail.i << " . sigma_" << fail.k
              << " differs from sigma_" << fail.i << " at point " << fail.point << "\n";
  }
  return s ? 0 : 1;
}

int run_omega_build(size_t m, bool as_json) {
  auto fam = omega_faithful(m);
  if (as_json) {
    json out{{"m", m}, {"n", fam.n}, {"maps", format_sigma(fam)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << fam.n << " points: " << format_sigma(fam) << "\n";
  }
  return 0;
}

int run_ybe(const std::string& maps, bool as_json) {
  auto fam = parse_sigma(maps);
  auto res = gybe_commutator(fam);
  if (as_json) {
    json out{{"maps", format_sigma(fam)}, {"commutator_zero", res.is_zero}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "[R12, R23] " << (res.is_zero ? "= 0" : "!= 0") << "\n";
  }
  return res.is_zero ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series and graph combinatorics of quadratic algebras"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string input, maps, method = "both";
  size_t degree = 8, n_gen = 3, m_colors = 1, n_points = 1, trials = 20;
  uint32_t prime = 17;
  uint64_t seed = 1;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a presentation file");
  hilbert->add_option("--input", input, "presentation document")->required();
  hilbert->add_option("--degree", degree, "truncation degree");
  hilbert->add_option("--method", method, "complete | rank | both")
      ->check(CLI::IsMember({"complete", "rank", "both"}));

  auto* anick = app.add_subcommand("anick", "random search for the minimal Hilbert series");
  anick->add_option("--n", n_gen, "number of generators")->required();
  anick->add_option("--degree", degree, "truncation degree");
  anick->add_option("--prime", prime, "coefficient prime");
  anick->add_option("--trials", trials, "number of seeded trials");
  anick->add_option("--seed", seed, "master seed");

  auto* rit = app.add_subcommand("rit", "map-family combinatorics");
  rit->require_subcommand(1);
  auto* rit_check = rit->add_subcommand("check", "branch condition of a family");
  rit_check->add_option("--maps", maps, "family, e.g. 1,2;2,1")->required();
  auto* rit_decomp = rit->add_subcommand("decompose", "structure decomposition of a map pair");
  rit_decomp->add_option("--maps", maps, "two maps, e.g. 2,1,1;2,1,2")->required();
  auto* rit_classify = rit->add_subcommand("classify", "classes of families up to equivalence");
  rit_classify->add_option("--m", m_colors, "number of maps")->required();
  rit_classify->add_option("--n", n_points, "number of points")->required();
  rit_classify->add_option("--degree", degree, "series truncation degree");

  auto* omega = app.add_subcommand("omega", "representations of <x_i | x_i x_j = x_i>");
  omega->require_subcommand(1);
  auto* omega_check = omega->add_subcommand("check", "test and decompose a representation");
  omega_check->add_option("--maps", maps, "family")->required();
  auto* omega_build = omega->add_subcommand("build", "smallest faithful construction");
  omega_build->add_option("--m", m_colors, "number of generators")->required();

  auto* ybe = app.add_subcommand("ybe", "braid operator checks");
  ybe->require_subcommand(1);
  auto* ybe_check = ybe->add_subcommand("check", "commutator of the composed operators");
  ybe_check->add_option("--maps", maps, "family")->required();

  for (auto* leaf : {hilbert, anick, rit_check, rit_decomp, rit_classify, omega_check,
                     omega_build, ybe_check})
    leaf->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hilbert->parsed()) return run_hilbert(input, degree, method, as_json);
    if (anick->parsed()) {
      if (!anick->count("--degree")) degree = n_gen <= 4 ? 5 : 4;
      return run_anick(n_gen, degree, prime, trials, seed, as_json);
    }
    if (rit_check->parsed()) return run_rit_check(maps, as_json);
    if (rit_decomp->parsed()) return run_rit_decompose(maps, as_json);
    if (rit_classify->parsed()) {
      if (!rit_classify->count("--degree")) degree = 4;
      return run_rit_classify(m_colors, n_points, degree, as_json);
    }
    if (omega_check->parsed()) return run_omega_check(maps, as_json);
    if (omega_build->parsed()) return run_omega_build(m_colors, as_json);
    if (ybe_check->parsed()) return run_ybe(maps, as_json);
  } catch (const SizeBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}

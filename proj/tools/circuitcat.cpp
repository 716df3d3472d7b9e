// circuitcat command-line front end.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "circuitcat/amodelrec.hpp"
#include "circuitcat/emit.hpp"
#include "circuitcat/error.hpp"
#include "circuitcat/mutation.hpp"

using namespace circuitcat;

namespace {

constexpr int kVerifyFailed = 2;

struct CircuitArgs {
  std::vector<Int> a;
  std::vector<Int> nu;
  int n = 0;

  void attach(CLI::App* cmd, bool with_n) {
    cmd->add_option("--a", a, "circuit entries, e.g. 1,2,3,-1,-5")->delimiter(',')->required();
    cmd->add_option("--nu", nu, "nu entries (default all zero)")->delimiter(',');
    if (with_n) cmd->add_option("--n", n, "number of objects")->required();
  }

  Circuit circuit() const { return nu.empty() ? Circuit::validate(a) : Circuit::validate(a, nu); }
};

Int max_weight() {
  const char* env = std::getenv("CIRCUITCAT_MAX_WEIGHT");
  if (env == nullptr || *env == '\0') return 64;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "CIRCUITCAT_MAX_WEIGHT must be an integer");
  }
}

void check_weight(int n) {
  if (n - 1 > max_weight()) {
    throw Error(ErrorCode::OutOfRange,
                "n-1 = " + std::to_string(n - 1) + " exceeds CIRCUITCAT_MAX_WEIGHT = " + std::to_string(max_weight()));
  }
}

void write(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::OutOfRange, "cannot open " + out);
  f << text;
}

template <class Cat>
std::string hom_table(const Cat& cat) {
  std::ostringstream s;
  for (int j = 0; j < cat.objects(); ++j)
    for (int k = j; k < cat.objects(); ++k) {
      s << "Hom(" << j << "," << k << ") dim " << cat.dim(j, k);
      for (std::size_t x = 0; x < cat.dim(j, k); ++x)
        s << (x == 0 ? ": " : ", ") << cat.label(j, k, x) << " [" << cat.degree(j, k, x) << "]";
      s << "\n";
    }
  return s.str();
}

std::string info_text(const Circuit& c) {
  const Signature s = signature(c);
  const CobordismKind k = classify(c);
  std::ostringstream out;
  out << std::left;
  out << std::setw(11) << "circuit" << c.to_string() << "\n"
      << std::setw(11) << "signature" << "(" << s.p << "," << s.q << ")\n"
      << std::setw(11) << "volume" << volume(c) << "\n"
      << std::setw(11) << "kind" << to_string(k.kind) << "\n"
      << std::setw(11) << "mu" << k.mu << "\n"
      << std::setw(11) << "x_plus" << k.x_plus << "\n"
      << std::setw(11) << "x_minus" << k.x_minus << "\n";
  return out.str();
}

int run_sweep(std::size_t max_d, Int max_entry, Int nu_bound, const std::string& out) {
  std::size_t instances = 0, compositions = 0, with_leaves = 0, circuits = 0;
  for (const Circuit& base : enumerate_circuits(max_d, max_entry)) {
    ++circuits;
    for (const auto& nu : balanced_nus(base.size(), nu_bound)) {
      const Circuit c = Circuit::from_internal(base.a(), nu);
      for (int n = 1; n < volume(c); ++n) {
        check_weight(n);
        const IsoReport r = verify_iso(c, n);
        ++instances;
        compositions += r.compositions_checked;
        with_leaves += r.dual_leaves.empty() ? 0 : 1;
        if (!r.ok()) {
          write(to_json(r).dump(2) + "\n", out);
          return kVerifyFailed;
        }
      }
    }
  }
  const Json summary{{"circuits", circuits},
                     {"instances", instances},
                     {"compositions_checked", compositions},
                     {"dual_leaf_instances", with_leaves},
                     {"failures", 0}};
  write(summary.dump(2) + "\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror categories of elementary birational cobordisms"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "write output to this path");

  CircuitArgs info_args, b_args, a_args, verify_args, mut_args, dot_args, json_args;
  bool info_json_flag = false;

  auto* info = app.add_subcommand("info", "signature, volume and cobordism kind");
  info_args.attach(info, false);
  info->add_flag("--json", info_json_flag, "JSON output");

  auto* bmodel = app.add_subcommand("bmodel", "Hom bases of the B-model category");
  b_args.attach(bmodel, true);

  auto* amodel = app.add_subcommand("amodel", "Hom bases of the A-model category");
  a_args.attach(amodel, true);

  auto* verify = app.add_subcommand("verify", "check the A/B isomorphism");
  bool sweep = false;
  std::size_t max_d = 3;
  Int max_entry = 5, nu_bound = 1;
  verify->add_option("--a", verify_args.a, "circuit entries")->delimiter(',');
  verify->add_option("--nu", verify_args.nu, "nu entries")->delimiter(',');
  verify->add_option("--n", verify_args.n, "number of objects");
  verify->add_flag("--sweep", sweep, "verify every circuit within the bounds");
  verify->add_option("--max-d", max_d, "sweep: largest d")->capture_default_str();
  verify->add_option("--max-entry", max_entry, "sweep: largest |a_i|")->capture_default_str();
  verify->add_option("--nu-bound", nu_bound, "sweep: largest |nu_i|")->capture_default_str();

  auto* mutate = app.add_subcommand("mutate", "Gram matrix and braid mutations");
  mut_args.attach(mutate, true);
  std::string mode = "euler";
  std::vector<std::size_t> left, right;
  bool twist = false, koszul = false;
  mutate->add_option("--mode", mode, "euler or poincare")->check(CLI::IsMember({"euler", "poincare"}));
  mutate->add_option("--left", left, "left mutations at these 1-based positions, in order")->delimiter(',');
  mutate->add_option("--right", right, "right mutations applied after the left ones")->delimiter(',');
  mutate->add_flag("--half-twist", twist, "apply the half twist last");
  mutate->add_flag("--koszul", koszul, "report the Koszul duality check");

  auto* dot = app.add_subcommand("emit-dot", "quiver as a DOT digraph");
  dot_args.attach(dot, true);

  auto* emit_json = app.add_subcommand("emit-json", "category dump as JSON");
  json_args.attach(emit_json, true);
  std::string model = "b";
  emit_json->add_option("--model", model, "b or a")->check(CLI::IsMember({"a", "b"}));

  auto* oracle = app.add_subcommand("oracle", "intersection indices of the one-dimensional model");
  Int a0 = 1, a1 = 1, oj = 0, ok = 0;
  bool oracle_json = false;
  oracle->add_option("--a0", a0)->required();
  oracle->add_option("--a1", a1)->required();
  oracle->add_option("--j", oj)->required();
  oracle->add_option("--k", ok)->required();
  oracle->add_flag("--json", oracle_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*info) {
      const Circuit c = info_args.circuit();
      write(info_json_flag ? info_json(c).dump(2) + "\n" : info_text(c), out);
    } else if (*bmodel) {
      check_weight(b_args.n);
      write(hom_table(BCategory::build(b_args.circuit(), b_args.n)), out);
    } else if (*amodel) {
      check_weight(a_args.n);
      write(hom_table(ACategory::build(a_args.circuit(), a_args.n)), out);
    } else if (*verify) {
      if (sweep) return run_sweep(max_d, max_entry, nu_bound, out);
      if (verify_args.a.empty() || verify_args.n == 0) {
        throw Error(ErrorCode::OutOfRange, "verify needs --a and --n, or --sweep");
      }
      check_weight(verify_args.n);
      const IsoReport r = verify_iso(verify_args.circuit(), verify_args.n);
      write(to_json(r).dump(2) + "\n", out);
      return r.ok() ? 0 : kVerifyFailed;
    } else if (*mutate) {
      check_weight(mut_args.n);
      const Circuit c = mut_args.circuit();
      GramMatrix g = gram_of_collection(c, mut_args.n, mode == "poincare" ? GramMode::Poincare : GramMode::Euler);
      Json result{{"gram", to_json(g)}};
      if (!left.empty() || !right.empty() || twist) {
        for (std::size_t i : left) g = mutate_left(g, i);
        for (std::size_t i : right) g = mutate_right(g, i);
        if (twist) g = half_twist(g);
        result["mutated"] = to_json(g);
      }
      if (koszul) {
        const bool pass = check_koszul_duality(c, mut_args.n);
        result["koszul_duality"] = pass;
        write(result.dump(2) + "\n", out);
        return pass ? 0 : kVerifyFailed;
      }
      write(result.dump(2) + "\n", out);
    } else if (*dot) {
      check_weight(dot_args.n);
      write(emit_dot(dot_args.circuit(), dot_args.n), out);
    } else if (*emit_json) {
      check_weight(json_args.n);
      const Circuit c = json_args.circuit();
      const Json j = model == "a" ? to_json(ACategory::build(c, json_args.n)) : to_json(BCategory::build(c, json_args.n));
      write(j.dump(2) + "\n", out);
    } else if (*oracle) {
      const auto idx = intersection_indices(a0, a1, oj, ok);
      const auto geo = geometric_oracle(a0, a1, oj, ok);
      const Int count = intersection_count(a0, a1, oj, ok);
      if (oracle_json) {
        write(Json{{"indices", idx}, {"geometric", geo}, {"count", count}, {"agree", idx == geo && count == static_cast<Int>(idx.size())}}
                      .dump(2) +
                  "\n",
              out);
      } else {
        std::ostringstream s;
        auto row = [&](const char* name, const std::vector<Int>& v) {
          s << std::left << std::setw(11) << name;
          for (Int m : v) s << std::right << std::setw(4) << m;
          s << "\n";
        };
        row("indices", idx);
        row("geometric", geo);
        s << std::left << std::setw(11) << "count" << count << "\n";
        write(s.str(), out);
      }
      if (idx != geo || count != static_cast<Int>(idx.size())) return kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "freealg/claims.hpp"
#include "freealg/errors.hpp"

using namespace freealg;

namespace {

Rational parse_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(name, "not a rational number: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify freeness and symmetry claims in division rings of enveloping algebras"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string output;
  bool deterministic = false;
  app.add_option("--seed", seed, "seed for sampled evaluation points and random checks");
  app.add_option("-o,--output", output, "write the JSON report to this file instead of stdout");
  app.add_flag("--deterministic", deterministic, "zero the timing fields and omit the thread count");

  auto* certify = app.add_subcommand("certify", "certify a claim");
  certify->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "check an auxiliary statement");
  verify->require_subcommand(1);

  HeisenbergOptions hopt;
  auto* heis = certify->add_subcommand("heisenberg", "S, T in D(H): symmetry and freeness");
  heis->add_option("--max-word-len", hopt.max_word_len)->check(CLI::Range(1, 8));
  heis->add_option("--order", hopt.order)->check(CLI::Range(4, 256));
  heis->add_option("--exact-max-len", hopt.exact_max_len)->check(CLI::Range(0, 8));

  TwodimOptions topt;
  auto* twod = certify->add_subcommand("twodim", "the non-nilpotent two-dimensional algebra");
  twod->add_option("--max-word-len", topt.max_word_len)->check(CLI::Range(1, 8));
  twod->add_option("--order", topt.order)->check(CLI::Range(4, 256));
  twod->add_option("--exact-max-len", topt.exact_max_len)->check(CLI::Range(0, 8));

  int gr_len = 3;
  auto* gr = certify->add_subcommand("groupring", "x + x^-1, y + y^-1 in Q[F(x, y)]");
  gr->add_option("--max-word-len", gr_len)->check(CLI::Range(1, 10));

  CauchonOptions copt;
  std::string alpha, beta, shift = "2";
  auto* cau = certify->add_subcommand("cauchon", "free group pair from two orbits");
  cau->add_option("--alpha", alpha)->required();
  cau->add_option("--beta", beta)->required();
  cau->add_option("--shift", shift);
  cau->add_option("--max-word-len", copt.max_word_len)->check(CLI::Range(1, 6));
  cau->add_option("--order", copt.order)->check(CLI::Range(4, 256));

  NilpotentOptions nopt;
  auto* nil = certify->add_subcommand("nilpotent", "free nilpotent class 3: series map and inverses");
  nil->add_option("--order", nopt.order)->check(CLI::Range(4, 64));

  std::vector<std::string> lambdas{"2", "3", "-1/2"};
  auto* scal = verify->add_subcommand("scaling", "invariance of S, T under x -> lambda x, y -> y / lambda");
  scal->add_option("--lambda", lambdas);

  auto* val = verify->add_subcommand("valuation", "chi on the class-3 enveloping algebra");

  SelftestOptions sopt;
  auto* self = app.add_subcommand("selftest", "property suites");
  self->add_flag("--quick", sopt.quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunReport rep;
    if (heis->parsed()) {
      hopt.seed = seed;
      rep = certify_heisenberg(hopt);
    } else if (twod->parsed()) {
      topt.seed = seed;
      rep = certify_twodim(topt);
    } else if (gr->parsed()) {
      rep = certify_groupring(gr_len);
    } else if (cau->parsed()) {
      copt.alpha = parse_arg("--alpha", alpha);
      copt.beta = parse_arg("--beta", beta);
      copt.shift = parse_arg("--shift", shift);
      copt.seed = seed;
      rep = certify_cauchon(copt);
    } else if (nil->parsed()) {
      nopt.seed = seed;
      rep = certify_nilpotent(nopt);
    } else if (scal->parsed()) {
      std::vector<Rational> ls;
      for (const auto& l : lambdas) {
        ls.push_back(parse_arg("--lambda", l));
        if (ls.back() == 0) throw CLI::ValidationError("--lambda", "must be nonzero");
      }
      rep = verify_scaling(ls);
    } else if (val->parsed()) {
      rep = verify_valuation();
    } else if (self->parsed()) {
      sopt.seed = seed;
      rep = run_selftest(sopt);
    }
    const std::string text = rep.to_json(deterministic).dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw std::runtime_error("cannot write " + output);
      out << text;
    }
    return rep.exit_code();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "pilab/commands.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "pilab/actions.hpp"
#include "pilab/errors.hpp"
#include "pilab/exactalg.hpp"
#include "pilab/gallery.hpp"
#include "pilab/identities.hpp"
#include "pilab/report.hpp"
#include "pilab/scenario.hpp"
#include "pilab/symfun.hpp"

namespace pilab {

namespace {

struct Options {
  std::string scenario;
  std::string poly;
  std::size_t n = 1;
  std::string out = "tsv";
  std::optional<std::uint64_t> cap;
};

std::string describe(const Subspace& s) {
  std::string out;
  for (std::size_t k = 0; k < s.dim(); ++k) out += (k ? " " : "") + to_string(s.vector(k));
  return out.empty() ? "0" : out;
}

void decomposition_rows(Report& r, const Decomposition& d) {
  r.add("dim J", std::to_string(d.radical.dim()));
  r.add("nilpotency index", std::to_string(d.nilpotency_index));
  r.add("J basis", describe(d.radical));
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const std::string name = "B_" + std::to_string(i + 1);
    r.add(name + " dim", std::to_string(d.components[i].dim()));
    r.add(name + " basis", describe(d.components[i]));
  }
}

void check_rows(Report& r, const CheckReport& rep) {
  for (const auto& it : rep.items) r.check(it.name + "?", it.pass ? "yes" : "no", "yes", it.pass);
}

std::size_t exponent_of(const Scenario& s, Decomposition* used = nullptr) {
  Decomposition d = s.decomposition ? *s.decomposition : wedderburn_malcev(s.algebra, s.action);
  if (s.decomposition) {
    const CheckReport rep = verify_decomposition(s.algebra, s.action, d);
    if (const CheckItem* bad = rep.first_failure()) throw ValidationError("decomposition", bad->name);
  }
  if (used) *used = d;
  return pi_exponent(d);
}

void kernel_stats(std::ostream& err, const EvaluationImage& img) {
  err << "rank kernel: isa=" << kernels::to_string(img.stats.isa) << " rows=" << img.stats.rows_seen
      << " modular_rank=" << img.stats.modular_rank << " exact_rank=" << img.stats.exact_rank
      << " prepass=" << (img.stats.modular_prepass ? "yes" : "no") << "\n";
}

Report run(const std::string& cmd, const Options& o, std::ostream& err) {
  Report r;
  r.command = cmd;
  const std::uint64_t cap = resource_cap(o.cap);
  if (cmd == "gallery") {
    r = gallery_report(3, cap);
    return r;
  }

  const std::string text = read_file(o.scenario);
  std::string digest_input = cmd + "\n" + text;
  const Scenario s = parse_scenario(text);
  const std::string n_str = std::to_string(o.n);

  if (cmd == "radical") {
    const RadicalResult rad = radical(s.algebra);
    r.add("dim A", std::to_string(s.algebra.dim()));
    r.add("dim J", std::to_string(rad.j.dim()));
    r.add("nilpotency index", std::to_string(rad.p));
    r.add("J basis", describe(rad.j));
  } else if (cmd == "decompose") {
    const Decomposition d = wedderburn_malcev(s.algebra, s.action);
    decomposition_rows(r, d);
    check_rows(r, verify_decomposition(s.algebra, s.action, d));
  } else if (cmd == "exponent") {
    if (s.decomposition) {
      const CheckReport rep = verify_decomposition(s.algebra, s.action, *s.decomposition);
      if (!rep.pass()) {
        check_rows(r, rep);
        r.check("d(A)", "unavailable", "-", false);
        r.digest = hex64(fnv1a(digest_input));
        return r;
      }
    }
    Decomposition d;
    const std::size_t e = exponent_of(s, &d);
    r.add("dim J", std::to_string(d.radical.dim()));
    r.add("components", std::to_string(d.components.size()));
    r.check("d(A)", std::to_string(e), "<=" + std::to_string(s.algebra.dim()), e <= s.algebra.dim());
  } else if (cmd == "codim") {
    digest_input += "\nn=" + n_str;
    const EvaluationImage img = codimension(s.algebra, s.action, o.n, cap);
    kernel_stats(err, img);
    const std::size_t c = img.rank();
    r.add("c^H_" + n_str, std::to_string(c));
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), s.algebra.dim(), o.n + 1);
    r.check("c^H_" + n_str + " <= (dim A)^" + std::to_string(o.n + 1), std::to_string(c), "<=" + limit.get_str(),
            limit >= c);
    if (s.graded) {
      const std::size_t g = graded_codimension(*s.graded, o.n, cap).rank();
      r.check("c^gr_" + n_str, std::to_string(g), "=" + std::to_string(c), g == c);
    }
  } else if (cmd == "bounds") {
    digest_input += "\nn=" + n_str;
    for (std::size_t n = 1; n <= o.n; ++n) {
      const BoundsResult b = check_bounds(s.algebra, s.action, n, cap);
      const std::string k = std::to_string(n);
      r.add("c_" + k, std::to_string(b.c_ordinary));
      r.add("c^H_" + k, std::to_string(b.c_h));
      r.check("c_" + k + " <= c^H_" + k, std::to_string(b.c_ordinary), "<=" + std::to_string(b.c_h),
              b.report.items[0].pass);
      r.check("c^H_" + k + " <= (dim H)^" + k + " c_" + k, std::to_string(b.c_h), "<=" + to_string(b.h_bound),
              b.report.items[1].pass);
      r.check("c^H_" + k + " <= (dim A)^" + std::to_string(n + 1), std::to_string(b.c_h),
              "<=" + to_string(b.dim_bound), b.report.items[2].pass);
    }
  } else if (cmd == "cochar") {
    digest_input += "\nn=" + n_str;
    if (o.n > 5) throw Error(ErrorKind::guard_exceeded, "cocharacters are computed for n <= 5");
    const EvaluationImage img = codimension(s.algebra, s.action, o.n, cap);
    kernel_stats(err, img);
    const auto rows = cocharacter(img);
    mpz_class total = 0;
    for (const auto& row : rows) {
      r.add("m(" + to_string(row.lambda) + ")", std::to_string(row.multiplicity));
      total += mpz_class(static_cast<unsigned long>(row.multiplicity)) * hook_dim(row.lambda);
    }
    r.check("sum m dim", total.get_str(), "=" + std::to_string(img.rank()), total == img.rank());
    try {
      Decomposition d;
      const std::size_t e = exponent_of(s, &d);
      const bool ok = multiplicity_vanishing_check(rows, e, d.nilpotency_index, s.algebra.dim());
      r.check("vanishing outside the hook (d=" + std::to_string(e) + ", p=" +
                  std::to_string(d.nilpotency_index) + ")",
              ok ? "yes" : "no", "yes", ok);
    } catch (const Error& e) {
      r.add("vanishing outside the hook", std::string("unavailable: ") + to_string(e.kind()));
    }
  } else if (cmd == "check-identity") {
    const std::string ptext = read_file(o.poly);
    digest_input += "\n" + ptext;
    const HPolynomial f = parse_polynomial(ptext, s.action.h());
    const bool id = is_identity(f, s.algebra, s.action, cap);
    r.add("polynomial", to_string(f, s.action.h()));
    r.check("identity", id ? "yes" : "no", "yes", id);
  } else if (cmd == "verify") {
    if (!s.decomposition) throw ValidationError("verify", "scenario has no candidate decomposition");
    check_rows(r, verify_decomposition(s.algebra, s.action, *s.decomposition));
  }
  r.digest = hex64(fnv1a(digest_input));
  return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial identities of algebras with actions, over the rationals"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Report format")->check(CLI::IsMember({"tsv", "text"}));
  app.add_option("--cap", o.cap, "Entry cap for evaluation matrices (PILAB_CAP overrides)");

  auto scenario_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("scenario", o.scenario, "Scenario file")->required();
    c->add_option("--out", o.out, "Report format")->check(CLI::IsMember({"tsv", "text"}));
    c->add_option("--cap", o.cap, "Entry cap for evaluation matrices (PILAB_CAP overrides)");
    return c;
  };
  scenario_cmd("radical", "Jacobson radical and nilpotency index");
  scenario_cmd("decompose", "Invariant Wedderburn-Malcev decomposition");
  scenario_cmd("exponent", "PI-exponent d(A) from an invariant decomposition");
  scenario_cmd("verify", "Check the scenario's candidate decomposition");
  const std::pair<const char*, const char*> degree_cmds[] = {
      {"codim", "Codimension c^H_n in degree n"},
      {"cochar", "S_n-cocharacter multiplicities in degree n"},
      {"bounds", "Check the codimension bounds for 1..n"}};
  for (auto [name, help] : degree_cmds) {
    scenario_cmd(name, help)->add_option("--n", o.n, "Degree")->required()->check(
        CLI::Range(1, 12));
  }
  scenario_cmd("check-identity", "Test whether a polynomial vanishes on the algebra")
      ->add_option("--poly", o.poly, "Polynomial file")
      ->required();
  CLI::App* gal = app.add_subcommand("gallery", "Run every worked example");
  gal->add_option("--out", o.out, "Report format")->check(CLI::IsMember({"tsv", "text"}));
  gal->add_option("--cap", o.cap, "Entry cap for evaluation matrices (PILAB_CAP overrides)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_error;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const Report r = run(cmd, o, err);
    out << (o.out == "text" ? to_text(r) : to_tsv(r));
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << cmd << ": " << ms << " ms\n";
    return r.pass() ? exit_pass : exit_math_fail;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace pilab

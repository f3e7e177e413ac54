#include <CLI11.hpp>

#include <cctype>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hodgeint/characters.hpp"
#include "hodgeint/checks.hpp"
#include "hodgeint/hodge.hpp"
#include "hodgeint/hurwitz.hpp"
#include "hodgeint/json_io.hpp"
#include "hodgeint/wfunctions.hpp"

namespace {

using hodgeint::Json;

struct Outcome {
  Json inputs = Json::object();
  Json output = Json::object();
  std::string status = "ok";
  std::vector<std::string> residuals;
  bool is_verify = false;
};

int emit(const std::string& command, const Outcome& o) {
  Json env;
  env["command"] = command;
  env["inputs"] = o.inputs;
  env["output"] = o.output;
  env["status"] = o.status;
  if (o.is_verify || !o.residuals.empty()) {
    Json r = Json::array();
    for (auto& s : o.residuals) r.push_back(s);
    env["residuals"] = std::move(r);
  }
  std::cout << env.dump(2) << std::endl;
  if (o.status == "ok") return 0;
  if (o.status == "mismatch") return 1;
  return 2;
}

hodgeint::TauPoly parse_scale(std::string s) {
  using hodgeint::GaussianRational;
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  // a/tau is shorthand for a*tau^-1
  std::string norm;
  for (size_t i = 0; i < t.size();) {
    if (t.compare(i, 4, "/tau") == 0) {
      norm += "*tau^-1";
      i += 4;
    } else {
      norm += t[i++];
    }
  }
  GaussianRational coeff(hodgeint::rational(1));
  long exponent = 0;
  size_t pos = 0;
  while (pos <= norm.size()) {
    size_t next = norm.find('*', pos);
    std::string f = norm.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? norm.size() + 1 : next + 1;
    if (f.empty()) continue;
    bool neg = false;
    if (f[0] == '+') f = f.substr(1);
    if (!f.empty() && f[0] == '-' && f != "-i" &&
        !(f.size() > 1 && (std::isdigit(static_cast<unsigned char>(f[1]))))) {
      neg = true;
      f = f.substr(1);
    }
    if (f == "i") {
      coeff *= GaussianRational::i();
    } else if (f == "-i") {
      coeff *= -GaussianRational::i();
    } else if (f.rfind("tau", 0) == 0) {
      if (f == "tau")
        exponent += 1;
      else if (f.compare(3, 1, "^") == 0)
        exponent += std::stol(f.substr(4));
      else
        throw hodgeint::DomainError("cannot parse scale factor: " + f);
    } else {
      coeff *= GaussianRational(hodgeint::rational_from_string(f));
    }
    if (neg) coeff = -coeff;
  }
  return hodgeint::TauPoly::monomial(exponent, coeff);
}

Json partitions_json(const std::vector<hodgeint::Partition>& ps) {
  Json j = Json::array();
  for (auto& p : ps) j.push_back(hodgeint::json_of(p));
  return j;
}

Outcome from_report(Json inputs, const hodgeint::CheckReport& rep) {
  Outcome o;
  o.inputs = std::move(inputs);
  o.is_verify = true;
  o.status = rep.ok ? "ok" : "mismatch";
  o.residuals = rep.residuals;
  o.output = Json{{"failures", rep.residuals.size()}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hodgeint;

  CLI::App app{"Exact generating functions for two-partition Hodge integrals"};
  app.require_subcommand(1);
  std::function<Outcome()> action;
  std::string command;

  // partitions --d D
  {
    auto* cmd = app.add_subcommand("partitions", "List partitions of d");
    auto d = std::make_shared<long>(0);
    cmd->add_option("--d", *d, "degree")->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&, d] {
      command = "partitions";
      action = [d] {
        Outcome o;
        o.inputs = Json{{"d", *d}};
        auto ps = enumerate_partitions(*d);
        o.output = Json{{"count", ps.size()}, {"partitions", partitions_json(ps)}};
        return o;
      };
    });
  }

  // char --nu [..] --mu [..]
  {
    auto* cmd = app.add_subcommand("char", "Irreducible character value");
    auto nu = std::make_shared<std::string>(), mu = std::make_shared<std::string>();
    cmd->add_option("--nu", *nu, "shape, e.g. [2,1]")->required();
    cmd->add_option("--mu", *mu, "class, e.g. [3]")->required();
    cmd->callback([&, nu, mu] {
      command = "char";
      action = [nu, mu] {
        Partition pn = partition_from_string(*nu), pm = partition_from_string(*mu);
        Outcome o;
        o.inputs = Json{{"nu", json_of(pn)}, {"mu", json_of(pm)}};
        o.output = Json{{"chi", to_string(chi(pn, pm))}};
        return o;
      };
    });
  }

  // w --mu [..] --nu [..] [--series N]
  {
    auto* cmd = app.add_subcommand("w", "Hopf-link invariant W_{mu,nu}");
    auto mu = std::make_shared<std::string>("[]");
    auto nu = std::make_shared<std::string>("[]");
    auto order = std::make_shared<long>(0);
    auto* s = cmd->add_option("--series", *order, "expand at q = e^{i lambda} to this order");
    cmd->add_option("--mu", *mu, "first partition");
    cmd->add_option("--nu", *nu, "second partition");
    cmd->callback([&, mu, nu, order, s] {
      command = "w";
      bool series = s->count() > 0;
      action = [mu, nu, order, series] {
        Partition pm = partition_from_string(*mu), pn = partition_from_string(*nu);
        Outcome o;
        o.inputs = Json{{"mu", json_of(pm)}, {"nu", json_of(pn)}};
        if (series) {
          o.inputs["order"] = *order;
          o.output = Json{{"series", json_of(w_series(pm, pn, *order))}};
        } else {
          o.output = Json{{"value", json_of(w_munu_def(pm, pn))}};
        }
        return o;
      };
    });
  }

  // hurwitz --g G --mu-plus [..] --mu-minus [..]
  {
    auto* cmd = app.add_subcommand("hurwitz", "Disconnected double Hurwitz number");
    auto g = std::make_shared<long>(0);
    auto mp = std::make_shared<std::string>(), mm = std::make_shared<std::string>();
    cmd->add_option("--g", *g, "genus")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--mu-plus", *mp, "ramification over 0")->required();
    cmd->add_option("--mu-minus", *mm, "ramification over infinity")->required();
    cmd->callback([&, g, mp, mm] {
      command = "hurwitz";
      action = [g, mp, mm] {
        Partition pp = partition_from_string(*mp), pm = partition_from_string(*mm);
        Outcome o;
        o.inputs = Json{{"g", *g}, {"mu_plus", json_of(pp)}, {"mu_minus", json_of(pm)}};
        o.output = Json{{"value", to_string(hurwitz_number(*g, pp, pm))}};
        return o;
      };
    });
  }

  // phi --d D [--exact | --series N --scale EXPR]
  {
    auto* cmd = app.add_subcommand("phi", "Burnside exponential-sum matrix");
    auto d = std::make_shared<long>(1);
    auto order = std::make_shared<long>(0);
    auto scale = std::make_shared<std::string>("1");
    cmd->add_option("--d", *d, "degree")->required()->check(CLI::PositiveNumber);
    auto* s = cmd->add_option("--series", *order, "expand to this lambda order");
    cmd->add_option("--scale", *scale, "lambda multiplier, e.g. -i*tau or 1/2");
    cmd->add_flag("--exact", "print exact exponential sums (default)");
    cmd->callback([&, d, order, scale, s] {
      command = "phi";
      bool series = s->count() > 0;
      action = [d, order, scale, series] {
        Outcome o;
        o.inputs = Json{{"d", *d}};
        auto basis = enumerate_partitions(*d);
        Json entries = Json::array();
        if (series) {
          o.inputs["order"] = *order;
          o.inputs["scale"] = *scale;
          TauPoly c = parse_scale(*scale);
          for (auto& mu : basis) {
            Json row = Json::array();
            for (auto& nu : basis)
              row.push_back(json_of(phi_series(mu, nu, c, *order)));
            entries.push_back(std::move(row));
          }
        } else {
          for (auto& mu : basis) {
            Json row = Json::array();
            for (auto& nu : basis) row.push_back(json_of(phi_expsum(mu, nu)));
            entries.push_back(std::move(row));
          }
        }
        o.output = Json{{"basis", partitions_json(basis)}, {"entries", std::move(entries)}};
        return o;
      };
    });
  }

  // cjmatrix --d D
  {
    auto* cmd = app.add_subcommand("cjmatrix", "Cut-and-join matrix");
    auto d = std::make_shared<long>(1);
    cmd->add_option("--d", *d, "degree")->required()->check(CLI::PositiveNumber);
    cmd->callback([&, d] {
      command = "cjmatrix";
      action = [d] {
        Outcome o;
        o.inputs = Json{{"d", *d}};
        o.output = json_of(cj_matrix(*d));
        return o;
      };
    });
  }

  // r-series --mu-plus [..] --mu-minus [..] --order N
  {
    auto* cmd = app.add_subcommand("r-series", "Disconnected family entry");
    auto mp = std::make_shared<std::string>(), mm = std::make_shared<std::string>();
    auto order = std::make_shared<long>(0);
    cmd->add_option("--mu-plus", *mp)->required();
    cmd->add_option("--mu-minus", *mm)->required();
    cmd->add_option("--order", *order, "lambda order")->required();
    cmd->callback([&, mp, mm, order] {
      command = "r-series";
      action = [mp, mm, order] {
        Partition pp = partition_from_string(*mp), pm = partition_from_string(*mm);
        Outcome o;
        o.inputs = Json{{"mu_plus", json_of(pp)}, {"mu_minus", json_of(pm)}, {"order", *order}};
        o.output = Json{{"series", json_of(r_entry(pp, pm, *order))}};
        return o;
      };
    });
  }

  // hodge --g G --mu-plus [..] --mu-minus [..] [--normalized]
  {
    auto* cmd = app.add_subcommand("hodge", "Connected lambda-coefficient extraction");
    auto g = std::make_shared<long>(0);
    auto mp = std::make_shared<std::string>(), mm = std::make_shared<std::string>();
    auto norm = std::make_shared<bool>(false);
    cmd->add_option("--g", *g, "genus")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--mu-plus", *mp)->required();
    cmd->add_option("--mu-minus", *mm)->required();
    cmd->add_flag("--normalized", *norm, "divide out the explicit prefactor");
    cmd->callback([&, g, mp, mm, norm] {
      command = "hodge";
      action = [g, mp, mm, norm] {
        Partition pp = partition_from_string(*mp), pm = partition_from_string(*mm);
        Outcome o;
        o.inputs = Json{{"g", *g},
                        {"mu_plus", json_of(pp)},
                        {"mu_minus", json_of(pm)},
                        {"normalized", *norm}};
        if (*norm)
          o.output = Json{{"value", json_of(normalized_integral(*g, pp, pm))}};
        else
          o.output = Json{{"coefficient", json_of(hodge_coefficient(*g, pp, pm))}};
        return o;
      };
    });
  }

  // k --mu-plus [..] --mu-minus [..] --order N [--route w|kg]
  {
    auto* cmd = app.add_subcommand("k", "Framed invariant entry");
    auto mp = std::make_shared<std::string>(), mm = std::make_shared<std::string>();
    auto order = std::make_shared<long>(0);
    auto route = std::make_shared<std::string>("w");
    cmd->add_option("--mu-plus", *mp)->required();
    cmd->add_option("--mu-minus", *mm)->required();
    cmd->add_option("--order", *order, "lambda order")->required();
    cmd->add_option("--route", *route, "w (character sum) or kg (from the R family)")
        ->check(CLI::IsMember({"w", "kg"}));
    cmd->callback([&, mp, mm, order, route] {
      command = "k";
      action = [mp, mm, order, route] {
        Partition pp = partition_from_string(*mp), pm = partition_from_string(*mm);
        Outcome o;
        o.inputs = Json{{"mu_plus", json_of(pp)},
                        {"mu_minus", json_of(pm)},
                        {"order", *order},
                        {"route", *route}};
        if (*route == "kg")
          o.output = Json{{"series", json_of(k_via_kg(pp, pm, *order))}};
        else
          o.output = Json{{"series", json_of(k_via_w(pp, pm, *order))}};
        return o;
      };
    });
  }

  // verify <which> --caps A B [--order N]
  {
    auto* cmd = app.add_subcommand("verify", "Run an identity suite");
    cmd->require_subcommand(1);
    auto caps = std::make_shared<std::vector<long>>();
    auto order = std::make_shared<long>(-1);

    auto add_verify = [&](const std::string& name, const std::string& help,
                          bool needs_order,
                          std::function<CheckReport(long, long, long)> run) {
      auto* sub = cmd->add_subcommand(name, help);
      sub->add_option("--caps", *caps, "caps (two integers)")
          ->required()
          ->expected(2);
      auto* op = sub->add_option("--order", *order, "lambda order");
      if (needs_order) op->required();
      sub->callback([&command, &action, caps, order, name, run] {
        command = "verify " + name;
        bool with_order = *order >= 0;
        action = [caps, order, run, with_order] {
          Json inputs{{"caps", *caps}};
          if (with_order) inputs["order"] = *order;
          return from_report(std::move(inputs),
                             run((*caps)[0], (*caps)[1], *order));
        };
      });
    };

    add_verify("rcj", "cut-and-join residual of the disconnected family", true,
               [](long a, long b, long n) { return check_rcj(a, b, n); });
    add_verify("initial", "tau = -1 initial values", true,
               [](long a, long b, long n) { return check_initial(a, b, n); });
    add_verify("kg", "K route agreement and tau-freeness", true,
               [](long a, long b, long n) { return check_kg(a, b, n); });
    add_verify("gk", "family reconstruction from K", true,
               [](long a, long b, long n) { return check_gk(a, b, n); });
    add_verify("key", "cross-route W equality", false,
               [](long a, long b, long) { return check_key(a, b); });
    add_verify("sum", "exponential-sum identities per degree", false,
               [](long a, long, long) {
                 CheckReport rep = check_phi_init(a);
                 rep.merge(check_phi_symmetry(a));
                 for (long d = 1; d <= a; ++d) rep.merge(check_sum_formula(d));
                 return rep;
               });
    add_verify("cj", "cut-and-join matrix identities", false,
               [](long a, long b, long) {
                 CheckReport rep;
                 for (long d = 1; d <= a; ++d) rep.merge(check_cut_join_phi(d));
                 for (long d = 1; d <= b; ++d) rep.merge(check_cut_join_routes(d));
                 return rep;
               });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return emit(command, action());
  } catch (const InsufficientPrecision& e) {
    Outcome o;
    o.status = "error";
    o.output = Json{{"error", std::string("insufficient precision: ") + e.what()}};
    return emit(command, o);
  } catch (const std::exception& e) {
    Outcome o;
    o.status = "error";
    o.output = Json{{"error", e.what()}};
    return emit(command, o);
  }
}

// qsi: verify series-product identities and print specialized characters.

#include "qsi/affine.hpp"
#include "qsi/identities.hpp"
#include "qsi/json_io.hpp"
#include "qsi/parallel.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kMatch = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Common {
  std::string order = "50";
  bool json = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--order,-T", c.order, "truncation order, integer or p/q")->capture_default_str();
  cmd->add_flag("--json", c.json, "print JSON instead of text");
  cmd->add_flag("--timing", c.timing, "report wall time (stderr, and in JSON reports)");
}

qsi::Rational order_of(const Common& c) {
  qsi::Rational t = qsi::parse_rational(c.order);
  if (t < 0) throw std::invalid_argument("--order must be non-negative");
  return t;
}

void print_summary(const std::string& label, const qsi::VerifyReport& r) {
  std::cout << label << ": " << (r.match ? "match" : "MISMATCH") << " through q^" << qsi::to_string(r.checked_through)
            << " (shifts " << qsi::to_string(r.lhs_shift) << ", " << qsi::to_string(r.rhs_shift) << ")\n";
  if (r.first_mismatch)
    std::cout << "  first mismatch at q^" << qsi::to_string(r.first_mismatch->exponent) << ": lhs "
              << r.first_mismatch->lhs_coeff.get_str() << ", rhs " << r.first_mismatch->rhs_coeff.get_str() << "\n";
}

void print_timing(const Common& c, const std::string& label, std::int64_t ms) {
  if (c.timing) std::cerr << label << ": " << ms << " ms\n";
}

// Prints one report per label in argument order and returns the exit code.
int emit_reports(const Common& c, const std::vector<std::string>& labels, const std::vector<qsi::VerifyReport>& reports) {
  bool all = true;
  for (const auto& r : reports) all = all && r.match;
  if (c.json) {
    if (reports.size() == 1) {
      std::cout << qsi::to_json(reports[0], c.timing).dump(2) << "\n";
    } else {
      qsi::Json out = qsi::Json::array();
      for (std::size_t i = 0; i < reports.size(); ++i)
        out.push_back(qsi::Json{{"name", labels[i]}, {"report", qsi::to_json(reports[i], c.timing)}});
      std::cout << out.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) print_summary(labels[i], reports[i]);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) print_timing(c, labels[i], reports[i].wall_time_ms);
  return all ? kMatch : kMismatch;
}

int emit_series(const Common& c, const qsi::QSeries& s) {
  if (c.json)
    std::cout << qsi::to_json(s).dump(2) << "\n";
  else
    std::cout << qsi::to_text(s) << "\n";
  return kMatch;
}

std::vector<std::string> expand_names(const std::vector<std::string>& names) {
  if (names.size() == 1 && names[0] == "all") return qsi::classical_identity_names();
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series verification of level-one affine character identities"};
  app.require_subcommand(1);
  int code = kMatch;
  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "check an identity to a given order");
  verify->require_subcommand(1);

  Common vc;
  std::vector<std::string> names;
  auto* classical = verify->add_subcommand("classical", "euler, jacobi, gauss_a, gauss_b, or all");
  classical->add_option("name", names, "identity names")->required();
  add_common(classical, vc);
  classical->callback([&] {
    action = [&] {
      const qsi::Rational t = order_of(vc);
      const auto list = expand_names(names);
      std::vector<qsi::IdentitySpec> specs;
      for (const auto& n : list) specs.push_back(qsi::classical_identity(n));
      std::vector<qsi::VerifyReport> reports(specs.size());
      const unsigned threads = qsi::threads_from_env();
      qsi::parallel_tasks(specs.size(), threads,
                          [&](std::size_t i, unsigned) { reports[i] = qsi::verify_identity(specs[i], t); });
      return emit_reports(vc, list, reports);
    };
  });

  std::int64_t m = 0;
  auto* class1 = verify->add_subcommand("class1", "the first family, indexed by m >= 1");
  class1->add_option("--m", m, "family index")->required();
  add_common(class1, vc);
  class1->callback([&] {
    action = [&] {
      auto spec = qsi::class1_identity(m);
      return emit_reports(vc, {spec.name}, {qsi::verify_identity(spec, order_of(vc), qsi::threads_from_env())});
    };
  });

  auto* class2 = verify->add_subcommand("class2", "the second family, indexed by m >= 1");
  class2->add_option("--m", m, "family index")->required();
  add_common(class2, vc);
  class2->callback([&] {
    action = [&] {
      auto spec = qsi::class2_identity(m);
      return emit_reports(vc, {spec.name}, {qsi::verify_identity(spec, order_of(vc), qsi::threads_from_env())});
    };
  });

  std::string partition;
  std::int64_t k = 0;
  auto* prop = verify->add_subcommand("proposition", "character formula against trace formula");
  prop->add_option("--partition", partition, "ascending parts, e.g. 1,3")->required();
  prop->add_option("--k", k, "weight index 0..n-1")->required();
  add_common(prop, vc);
  prop->callback([&] {
    action = [&] {
      auto p = qsi::Partition::parse(partition);
      auto r = qsi::verify_proposition(p, k, order_of(vc), qsi::threads_from_env());
      return emit_reports(vc, {"proposition " + p.to_string() + " k=" + std::to_string(k)}, {r});
    };
  });

  auto* series = app.add_subcommand("series", "print a truncated series");
  series->require_subcommand(1);
  Common sc;

  std::string scale = "1";
  long power = 1;
  auto* phi = series->add_subcommand("phi", "phi(q^scale)^power");
  phi->add_option("--scale", scale, "positive rational")->capture_default_str();
  phi->add_option("--power", power, "integer exponent")->capture_default_str();
  add_common(phi, sc);
  phi->callback([&] {
    action = [&] {
      qsi::ProductSpec spec({{qsi::parse_rational(scale), power}});
      return emit_series(sc, qsi::product_series(spec, order_of(sc)));
    };
  });

  std::string spec_text;
  auto* product = series->add_subcommand("product", "a product of phi factors given as JSON");
  product->add_option("--spec", spec_text, R"(e.g. [{"scale":"1","power":2},{"scale":"2","power":-1}])")->required();
  add_common(product, sc);
  product->callback([&] {
    action = [&] {
      auto spec = qsi::product_spec_from_json(qsi::Json::parse(spec_text));
      return emit_series(sc, qsi::product_series(spec, order_of(sc)));
    };
  });

  auto* character = series->add_subcommand("character", "character side; --order counts from the lead term");
  character->add_option("--partition", partition, "ascending parts")->required();
  character->add_option("--k", k, "weight index 0..n-1")->required();
  add_common(character, sc);
  character->callback([&] {
    action = [&] {
      auto p = qsi::Partition::parse(partition);
      return emit_series(sc, qsi::specialized_character_series(p, k, order_of(sc), qsi::threads_from_env()));
    };
  });

  auto* trace = series->add_subcommand("trace", "trace side; --order counts from the lead term");
  trace->add_option("--partition", partition, "ascending parts")->required();
  trace->add_option("--k", k, "weight index 0..n-1")->required();
  add_common(trace, sc);
  trace->callback([&] {
    action = [&] { return emit_series(sc, qsi::trace_series(qsi::Partition::parse(partition), k, order_of(sc))); };
  });

  auto* identity = app.add_subcommand("identity", "print an identity as JSON");
  identity->require_subcommand(1);
  std::string iname;
  auto* iclassical = identity->add_subcommand("classical", "a named classical identity");
  iclassical->add_option("name", iname)->required();
  iclassical->callback([&] { action = [&] { return (std::cout << qsi::to_json(qsi::classical_identity(iname)).dump(2) << "\n"), kMatch; }; });
  auto* iclass1 = identity->add_subcommand("class1", "first family");
  iclass1->add_option("--m", m)->required();
  iclass1->callback([&] { action = [&] { return (std::cout << qsi::to_json(qsi::class1_identity(m)).dump(2) << "\n"), kMatch; }; });
  auto* iclass2 = identity->add_subcommand("class2", "second family");
  iclass2->add_option("--m", m)->required();
  iclass2->callback([&] { action = [&] { return (std::cout << qsi::to_json(qsi::class2_identity(m)).dump(2) << "\n"), kMatch; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    code = action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

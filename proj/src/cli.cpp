#include "ftq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <new>

#include "ftq/bordism.hpp"
#include "ftq/correspondence.hpp"
#include "ftq/counting.hpp"
#include "ftq/family_json.hpp"
#include "ftq/schemes.hpp"
#include "ftq/suites.hpp"

namespace ftq::cli {

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Usage: return Usage;
    case ErrorCategory::Mathematical: return Mathematical;
    case ErrorCategory::Resource: return Resource;
  }
  return Internal;
}

namespace {

struct Context {
  Catalog catalog;
  const FamilyEntry* entry = nullptr;
  GroupLimits limits;
};

Context load(const RunConfig& config, bool need_family = true) {
  Context ctx{Catalog::builtins(), nullptr, {}};
  ctx.limits.max_order = config.cap_order;
  std::string family = config.family;
  if (!config.spec_path.empty()) {
    std::ifstream in(config.spec_path);
    if (!in) throw InvalidInput("cannot read spec file " + config.spec_path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(config.spec_path + ": " + e.what());
    }
    Catalog extra;
    if (doc.contains("families")) {
      extra = Catalog::from_json(doc);
    } else {
      extra = Catalog::from_json({{"families", nlohmann::json::array({doc})}});
    }
    if (family.empty() && !extra.family_names().empty()) family = extra.family_names().front();
    ctx.catalog.add(extra);
  }
  if (need_family) {
    if (family.empty()) throw InvalidInput("--family or --spec is required");
    ctx.entry = &ctx.catalog.family(family);
  }
  return ctx;
}

std::uint32_t check_prime(std::uint32_t p, const GroupLimits& limits) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (p > limits.max_prime)
    throw TooLarge("prime " + std::to_string(p) + " exceeds the supported bound " + std::to_string(limits.max_prime));
  return p;
}

std::uint32_t prime_or_default(const RunConfig& config, const Context& ctx) {
  if (config.prime) return check_prime(*config.prime, ctx.limits);
  return ctx.entry->smallest_prime();
}

GroupPtr group_for(const Context& ctx, std::uint32_t p) { return instantiate_family(ctx.entry->spec, p, ctx.limits); }

nlohmann::json matrix_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix_table(std::ostream& out, const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  out << std::setw(int(width)) << "";
  for (const auto& l : labels) out << "  " << std::setw(int(width)) << l;
  out << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << std::setw(int(width)) << (i < labels.size() ? labels[i] : "");
    for (const auto& c : cells[i]) out << "  " << std::setw(int(width)) << c;
    out << "\n";
  }
}

std::string matrix_text(std::span<const std::uint32_t> m, std::size_t dim) {
  std::string s = "[";
  for (std::size_t i = 0; i < dim; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < dim; ++j) s += (j ? " " : "") + std::to_string(m[i * dim + j]);
  }
  return s + "]";
}

}  // namespace

int cmd_group_info(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto ctx = load(config);
  const auto g = group_for(ctx, prime_or_default(config, ctx));
  const auto& cls = g->classes();
  if (config.format == "table") {
    out << "group " << g->name() << "\norder " << g->order() << "\nclasses " << cls.count() << "\n";
    out << "class  size  centralizer  representative\n";
    for (std::size_t c = 0; c < cls.count(); ++c)
      out << std::setw(5) << c << "  " << std::setw(4) << cls.class_sizes[c] << "  " << std::setw(11)
          << cls.centralizer_orders[c] << "  " << matrix_text(g->matrix(cls.class_reps[c]), g->dim()) << "\n";
    return Ok;
  }
  nlohmann::json reps = nlohmann::json::array();
  for (auto r : cls.class_reps) {
    auto m = g->matrix(r);
    reps.push_back(std::vector<std::uint32_t>(m.begin(), m.end()));
  }
  out << nlohmann::json{{"group", g->name()},
                        {"family", ctx.entry->spec.name},
                        {"prime", g->prime()},
                        {"order", g->order()},
                        {"class_count", cls.count()},
                        {"class_sizes", cls.class_sizes},
                        {"centralizer_orders", cls.centralizer_orders},
                        {"representatives", reps}}
             .dump(2)
      << "\n";
  return Ok;
}

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto ctx = load(config);
  const auto g = group_for(ctx, prime_or_default(config, ctx));
  ClassAlgebra algebra(g);
  const auto result = eigen_census(algebra);
  Integer burnside = 0, total = 0;
  for (const auto& [d, n] : result.census.entries) {
    burnside += n * d * d;
    total += n;
  }
  if (burnside != result.census.group_order)
    throw ValidationFailed("Burnside sum " + burnside.get_str() + " differs from |G| = " +
                           result.census.group_order.get_str());
  if (total != Integer(static_cast<unsigned long>(g->class_count())))
    throw ValidationFailed("multiplicities sum to " + total.get_str() + " but there are " +
                           std::to_string(g->class_count()) + " classes");
  if (config.format == "table") {
    out << "group " << g->name() << " (order " << g->order() << ")\n" << std::setw(8) << "dim" << std::setw(8) << "count\n";
    for (const auto& [d, n] : result.census.entries) out << std::setw(8) << d.get_str() << std::setw(8) << n.get_str() << "\n";
    return Ok;
  }
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (const auto& l : result.report.eigenvalues) eigenvalues.push_back(l.get_str());
  out << nlohmann::json{{"group", g->name()},
                        {"order", g->order()},
                        {"census", result.census.to_json()},
                        {"eigenvalues", eigenvalues},
                        {"burnside", true}}
             .dump(2)
      << "\n";
  return Ok;
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto ctx = load(config);
  const auto g = group_for(ctx, prime_or_default(config, ctx));
  ClassAlgebra algebra(g);
  const auto census = eigen_census(algebra).census;
  const auto value = census_count(census, config.genus);
  if (config.genus == 0) err << "warning: genus 0 is outside the validated regime g >= 1\n";
  nlohmann::json doc = {{"group", g->name()}, {"genus", config.genus}, {"count", to_string(value)}, {"method", "census"}};
  if (config.oracle) {
    const Rational brute(brute_force_hom_count(*g, config.genus));
    const Rational tqft = surface_invariant(algebra, config.genus) * Rational(static_cast<unsigned long>(g->order()));
    if (brute != value || tqft != value)
      throw ValidationFailed("census count " + to_string(value) + ", brute force " + to_string(brute) +
                             ", TQFT " + to_string(tqft) + " disagree");
    doc["oracle"] = to_string(brute);
  }
  if (config.format == "table") {
    out << to_string(value) << "\n";
    return Ok;
  }
  out << doc.dump(2) << "\n";
  return Ok;
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto ctx = load(config);
  const auto& entry = *ctx.entry;
  const auto labels = config.generators.empty() ? entry.basis : config.generators;
  for (const auto& l : labels) entry.generator(l);

  auto at_prime = [&](std::uint32_t p) {
    const auto g = group_for(ctx, p);
    ClassAlgebra algebra(g);
    std::vector<ClassFunction> gens;
    for (const auto& l : labels) gens.push_back(integrate_generator(entry.generator(l), g));
    return genus_matrix_at_prime(algebra, gens);
  };

  if (config.primes.empty() && config.prime && !config.validate) {
    const auto p = check_prime(*config.prime, ctx.limits);
    const auto m = at_prime(p);
    if (config.format == "table") {
      std::vector<std::vector<std::string>> cells;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        cells.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j) cells.back().push_back(to_string(m(i, j)));
      }
      print_matrix_table(out, labels, cells);
      return Ok;
    }
    out << nlohmann::json{{"labels", labels}, {"prime", p}, {"matrix", matrix_json(m)}}.dump(2) << "\n";
    return Ok;
  }

  // Fitting primes, validation prime and degree bound.
  std::vector<std::uint32_t> fit = config.primes;
  std::optional<std::uint32_t> validation = config.validate;
  std::size_t bound;
  if (!fit.empty()) {
    for (auto p : fit) check_prime(p, ctx.limits);
    if (!validation) {
      validation = fit.back();
      fit.pop_back();
    }
    if (fit.empty()) throw InsufficientPrimes("no fitting primes left after choosing the validation prime");
    bound = config.bound ? *config.bound : fit.size() - 1;
  } else {
    bound = config.bound ? *config.bound : 2 * entry.spec.variables().size() + 2;
    for (std::uint32_t p = entry.smallest_prime(); fit.size() < bound + 1; ++p)
      if (is_prime(p) && entry.supports(p) && (!validation || p != *validation)) fit.push_back(p);
    if (!validation) {
      std::uint32_t p = fit.back() + 1;
      while (!is_prime(p) || !entry.supports(p)) ++p;
      validation = p;
    }
  }
  check_prime(*validation, ctx.limits);
  for (auto p : fit)
    if (!entry.supports(p)) throw InvalidInput(entry.spec.name + " is not defined at p=" + std::to_string(p));
  if (fit.size() < bound + 1)
    throw InsufficientPrimes("degree bound " + std::to_string(bound) + " needs " + std::to_string(bound + 1) +
                             " fitting primes, got " + std::to_string(fit.size()));
  for (auto p : fit) check_prime(p, ctx.limits);

  std::vector<std::future<RationalMatrix>> jobs;
  for (auto p : fit) jobs.push_back(std::async(std::launch::async, at_prime, p));
  auto validation_job = std::async(std::launch::async, at_prime, *validation);
  std::vector<PrimeSample> samples;
  for (std::size_t i = 0; i < fit.size(); ++i) samples.push_back({fit[i], jobs[i].get()});
  const PrimeSample check{*validation, validation_job.get()};
  const auto matrix = interpolate(samples, check, bound, labels);

  if (config.format == "table") {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : matrix.entries) {
      cells.emplace_back();
      for (const auto& e : row) cells.back().push_back(e.to_string());
    }
    print_matrix_table(out, labels, cells);
    return Ok;
  }
  auto doc = matrix.to_json();
  nlohmann::json per_prime = nlohmann::json::array();
  for (const auto& s : samples) per_prime.push_back({{"prime", s.prime}, {"matrix", matrix_json(s.matrix)}});
  per_prime.push_back({{"prime", check.prime}, {"matrix", matrix_json(check.matrix)}});
  doc["per_prime"] = per_prime;
  out << doc.dump(2) << "\n";
  return Ok;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream&) {
  auto cfg = config;
  if (cfg.family.empty() && cfg.spec_path.empty()) {
    cfg.family = "AGL1";
    if (!cfg.prime) cfg.prime = 3;
  }
  const auto expr = bordism::parse(cfg.expression);
  const auto ctx = load(cfg);
  const auto g = group_for(ctx, prime_or_default(cfg, ctx));
  ClassAlgebra algebra(g);
  bordism::EvaluationLimits limits;
  limits.max_entries = cfg.cap_tensor;
  const auto map = bordism::evaluate(*expr, algebra, limits);
  const auto type = std::to_string(map.inputs) + "->" + std::to_string(map.outputs);
  if (map.inputs == 0 && map.outputs == 0) {
    if (cfg.format == "table")
      out << to_string(map.scalar()) << "\n";
    else
      out << nlohmann::json{{"group", g->name()}, {"expression", bordism::print(*expr)}, {"type", type},
                            {"value", to_string(map.scalar())}}
                 .dump(2)
          << "\n";
    return Ok;
  }
  if (cfg.format == "table") {
    for (std::size_t i = 0; i < map.matrix.rows(); ++i) {
      for (std::size_t j = 0; j < map.matrix.cols(); ++j) out << (j ? " " : "") << to_string(map.matrix(i, j));
      out << "\n";
    }
    return Ok;
  }
  out << nlohmann::json{{"group", g->name()},      {"expression", bordism::print(*expr)},
                        {"type", type},            {"inputs", map.inputs},
                        {"outputs", map.outputs},  {"matrix", matrix_json(map.matrix)}}
             .dump(2)
      << "\n";
  return Ok;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto results = run_suite(config.suite);
  bool passed = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (config.format == "table") {
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
  } else {
    out << nlohmann::json{{"suite", config.suite}, {"passed", passed}, {"checks", checks}}.dump(2) << "\n";
  }
  return passed ? Ok : Mathematical;
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.spec_path.empty()) {
    const auto listing = list_builtins();
    if (config.format == "table") {
      for (const auto& f : listing) {
        out << f["name"].get<std::string>() << ": " << f["description"].get<std::string>() << "\n";
        for (const auto& g : f["generators"])
          out << "  " << g["name"].get<std::string>() << ": " << g["description"].get<std::string>() << "\n";
      }
      return Ok;
    }
    out << listing.dump(2) << "\n";
    return Ok;
  }
  const auto ctx = load(config, false);
  out << ctx.catalog.to_json().dump(2) << "\n";
  return Ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact class-function TQFT toolkit for finite matrix groups"};
  app.require_subcommand(1);
  RunConfig config;
  std::string primes_text;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "Built-in or spec-file family name");
    sub->add_option("--spec", config.spec_path, "JSON family or catalog file")->check(CLI::ExistingFile);
    sub->add_option("-p,--prime", config.prime, "Prime field size");
    sub->add_option("--cap-order", config.cap_order, "Largest group order to instantiate")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* info = app.add_subcommand("group-info", "Order and conjugacy classes");
  add_group(info);
  add_format(info);
  auto* census = app.add_subcommand("census", "Character dimensions and multiplicities");
  add_group(census);
  add_format(census);
  auto* count = app.add_subcommand("count", "Number of homomorphisms from a surface group");
  add_group(count);
  add_format(count);
  count->add_option("-g,--genus", config.genus, "Surface genus");
  count->add_flag("--oracle", config.oracle, "Cross-check by brute force");
  auto* matrix = app.add_subcommand("matrix", "Genus operator on generators, interpolated in q");
  add_group(matrix);
  add_format(matrix);
  matrix->add_option("--primes", primes_text, "Comma-separated fitting primes");
  matrix->add_option("--validate", config.validate, "Held-out validation prime");
  matrix->add_option("--bound", config.bound, "Degree bound for interpolation");
  matrix->add_option("--generators", config.generators, "Generator names")->delimiter(',');
  auto* eval = app.add_subcommand("eval", "Evaluate a bordism word");
  add_group(eval);
  add_format(eval);
  eval->add_option("expression", config.expression, "Bordism word")->required();
  eval->add_option("--cap-tensor", config.cap_tensor, "Largest dense matrix size")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_format(verify);
  verify->add_option("--suite", config.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  auto* catalog = app.add_subcommand("catalog", "List built-in families and generators");
  add_format(catalog);
  catalog->add_option("--spec", config.spec_path, "JSON family or catalog file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (!primes_text.empty()) {
      std::stringstream ss(primes_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          const auto v = std::stoul(item, &used);
          if (used != item.size() || v > 0xffffffffUL) throw std::invalid_argument(item);
          config.primes.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
          throw InvalidInput("--primes expects comma-separated integers, got '" + item + "'");
        }
      }
    }
    if (info->parsed()) return cmd_group_info(config, out, err);
    if (census->parsed()) return cmd_census(config, out, err);
    if (count->parsed()) return cmd_count(config, out, err);
    if (matrix->parsed()) return cmd_matrix(config, out, err);
    if (eval->parsed()) return cmd_eval(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out, err);
    if (catalog->parsed()) return cmd_catalog(config, out, err);
    return Usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const nlohmann::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return Usage;
  } catch (const std::bad_alloc&) {
    err << "error: MemoryCap: out of memory\n";
    return Resource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Internal;
  }
}

}  // namespace ftq::cli

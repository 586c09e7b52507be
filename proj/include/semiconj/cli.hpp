// Command-line front end. Subcommands: check, classes, witness, verify,
// find-nontransitive, enumerate. Output is human-readable text by default
// or one structured object with --json; diagnostics go to the error
// stream. Exit status: 0 success, 1 a checked property is false, 2 bad
// input. Structured output is byte-stable for identical inputs and never
// depends on --jobs.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiconj/cayley_table.hpp"
#include "semiconj/condition.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/enumeration.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/goldens.hpp"
#include "semiconj/monoid_view.hpp"
#include "semiconj/relation.hpp"
#include "semiconj/table_io.hpp"

namespace semiconj::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::condition_violated:
    case Errc::bad_witness:
    case Errc::composition_failed:
      return 1;
    default:
      return 2;
  }
}

// Runs a command body; a SemiconjError becomes the error envelope on the
// chosen stream plus the contract exit status.
template <typename Body>
int guarded(const std::string& command, bool json_mode, std::ostream& out,
            std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const SemiconjError& e) {
    const int status = exit_code_for(e.code());
    if (json_mode) {
      json doc;
      doc["command"] = command;
      json error;
      error["code"] = errc_name(e.code());
      error["message"] = e.what();
      error["details"] = e.details();
      doc["error"] = error;
      doc["exit_status"] = status;
      out << doc.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return status;
  }
}

inline json table_to_json(const CayleyTable& s) {
  const std::size_t k = s.order();
  json rows = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k; ++j) {
      row.push_back(s.product(static_cast<element_id>(i),
                              static_cast<element_id>(j)));
    }
    rows.push_back(row);
  }
  json doc;
  doc["order"] = k;
  doc["rows"] = rows;
  return doc;
}

// Nontrivial related pairs (i, j) with i < j; the reflexive part carries
// no information.
inline json relation_pairs(const Relation& r) {
  json pairs = json::array();
  for (element_id i = 0; i < r.order(); ++i) {
    for (element_id j = i + 1; j < r.order(); ++j) {
      if (r.contains(i, j)) pairs.push_back(json::array({i, j}));
    }
  }
  return pairs;
}

inline void emit(std::ostream& out, json& doc, int status) {
  doc["exit_status"] = status;
  out << doc.dump(2) << '\n';
}

inline element_id checked_id(long long value, std::size_t order,
                             const char* role) {
  if (value < 0 || value >= static_cast<long long>(order)) {
    throw SemiconjError(Errc::bad_element,
                        std::string(role) + " = " + std::to_string(value) +
                            " is outside 0.." + std::to_string(order - 1),
                        {value});
  }
  return static_cast<element_id>(value);
}

}  // namespace detail

struct CheckOptions {
  std::string file;
  std::optional<int> n;
  std::optional<int> n_max;
  bool json_mode = false;
};

inline int run_check(const CheckOptions& opt, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded("check", opt.json_mode, out, err, [&] {
    const CayleyTable s = parse_table_file(opt.file);
    const bool commutative = is_commutative(s);
    const std::optional<element_id> identity = find_identity(s);
    int status = 0;

    json condition;
    if (opt.n) {
      const ConditionReport rep = satisfies_condition(s, *opt.n);
      condition["n"] = rep.n;
      condition["holds"] = rep.holds;
      json branches;
      branches["commute"] = rep.count(Branch::commute);
      branches["power"] = rep.count(Branch::power);
      branches["both"] = rep.count(Branch::both);
      branches["neither"] = rep.count(Branch::neither);
      condition["branches"] = branches;
      condition["first_failure"] =
          rep.first_failure ? json::array({rep.first_failure->first,
                                           rep.first_failure->second})
                            : json(nullptr);
      if (!rep.holds) status = 1;
    } else if (opt.n_max) {
      const std::optional<int> smallest = smallest_condition_n(s, *opt.n_max);
      condition["n_max"] = *opt.n_max;
      condition["smallest_n"] = smallest ? json(*smallest) : json(nullptr);
      if (!smallest) status = 1;
    }

    if (opt.json_mode) {
      json doc;
      doc["command"] = "check";
      doc["input"] = {{"file", opt.file}};
      json results;
      results["order"] = s.order();
      results["valid"] = true;
      results["commutative"] = commutative;
      results["identity"] = identity ? json(*identity) : json(nullptr);
      if (!condition.is_null()) results["condition"] = condition;
      doc["results"] = results;
      detail::emit(out, doc, status);
      return status;
    }

    out << "order: " << s.order() << '\n';
    out << "valid: yes\n";
    out << "commutative: " << (commutative ? "yes" : "no") << '\n';
    out << "identity: "
        << (identity ? std::to_string(*identity) : std::string("none"))
        << '\n';
    if (opt.n) {
      out << "condition n=" << condition["n"].get<int>() << ": "
          << (condition["holds"].get<bool>() ? "holds" : "fails");
      const auto& branches = condition["branches"];
      out << " (commute=" << branches["commute"].get<std::size_t>()
          << " power=" << branches["power"].get<std::size_t>()
          << " both=" << branches["both"].get<std::size_t>()
          << " neither=" << branches["neither"].get<std::size_t>() << ")\n";
      if (!condition["first_failure"].is_null()) {
        out << "first failing pair: ("
            << condition["first_failure"][0].get<element_id>() << ", "
            << condition["first_failure"][1].get<element_id>() << ")\n";
      }
    } else if (opt.n_max) {
      if (condition["smallest_n"].is_null()) {
        out << "condition: no exponent up to " << *opt.n_max << " works\n";
      } else {
        out << "condition: smallest exponent is "
            << condition["smallest_n"].get<int>() << '\n';
      }
    }
    return status;
  });
}

struct ClassesOptions {
  std::string file;
  bool json_mode = false;
};

inline int run_classes(const ClassesOptions& opt, std::ostream& out,
                       std::ostream& err) {
  return detail::guarded("classes", opt.json_mode, out, err, [&] {
    const CayleyTable s = parse_table_file(opt.file);
    const Relation rel = p_relation(s);
    const Relation closed = rel.closure();
    const bool transitive = rel == closed;
    const Partition part = partition_from(closed);
    const auto classes = part.classes();

    if (opt.json_mode) {
      json doc;
      doc["command"] = "classes";
      doc["input"] = {{"file", opt.file}};
      json results;
      results["order"] = s.order();
      results["pairs"] = detail::relation_pairs(rel);
      results["transitive"] = transitive;
      json class_list = json::array();
      for (const auto& members : classes) class_list.push_back(members);
      results["classes"] = class_list;
      results["class_count"] = classes.size();
      doc["results"] = results;
      detail::emit(out, doc, 0);
      return 0;
    }

    out << "order: " << s.order() << '\n';
    out << "~p pairs:";
    bool any = false;
    for (element_id i = 0; i < rel.order(); ++i) {
      for (element_id j = i + 1; j < rel.order(); ++j) {
        if (rel.contains(i, j)) {
          out << " (" << i << "," << j << ")";
          any = true;
        }
      }
    }
    if (!any) out << " none beyond reflexive";
    out << '\n';
    out << "~p transitive: " << (transitive ? "yes" : "no") << '\n';
    out << "~p* classes:";
    for (const auto& members : classes) {
      out << " {";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out << ",";
        out << members[i];
      }
      out << "}";
    }
    out << '\n';
    return 0;
  });
}

struct WitnessOptions {
  std::string file;
  long long a = 0;
  long long b = 0;
  long long c = 0;
  int n = 2;
  bool json_mode = false;
};

inline int run_witness(const WitnessOptions& opt, std::ostream& out,
                       std::ostream& err) {
  return detail::guarded("witness", opt.json_mode, out, err, [&] {
    const CayleyTable s = parse_table_file(opt.file);
    const element_id a = detail::checked_id(opt.a, s.order(), "a");
    const element_id b = detail::checked_id(opt.b, s.order(), "b");
    const element_id c = detail::checked_id(opt.c, s.order(), "c");
    const MonoidView m = adjoin_identity(s);
    const std::optional<Witness> w_ab = p_related(s, a, b);
    const std::optional<Witness> w_bc = p_related(s, b, c);

    json results;
    json s1;
    s1["order"] = m.order();
    s1["identity"] = m.identity();
    s1["adjoined"] = m.adjoined();
    results["s1"] = s1;
    results["w_ab"] = w_ab ? json::array({w_ab->u, w_ab->v}) : json(nullptr);
    results["w_bc"] = w_bc ? json::array({w_bc->u, w_bc->v}) : json(nullptr);

    int status = 0;
    std::optional<Witness> composed;
    if (!w_ab || !w_bc) {
      results["composed"] = nullptr;
      status = 1;
    } else {
      composed = compose_witnesses(s, opt.n, *w_ab, *w_bc);
      results["composed"] = json::array({composed->u, composed->v});
      json checks;
      checks["xy"] = m.product(composed->u, composed->v);
      checks["yx"] = m.product(composed->v, composed->u);
      checks["xy_equals_a"] = m.product(composed->u, composed->v) == a;
      checks["yx_equals_c"] = m.product(composed->v, composed->u) == c;
      results["checks"] = checks;
    }

    if (opt.json_mode) {
      json doc;
      doc["command"] = "witness";
      json input;
      input["file"] = opt.file;
      input["a"] = a;
      input["b"] = b;
      input["c"] = c;
      input["n"] = opt.n;
      doc["input"] = input;
      doc["results"] = results;
      detail::emit(out, doc, status);
      return status;
    }

    out << "S^1: order " << m.order() << ", identity " << m.identity()
        << (m.adjoined() ? " (adjoined)" : " (already present)") << '\n';
    if (w_ab) {
      out << a << " ~p " << b << " via (u, v) = (" << w_ab->u << ", "
          << w_ab->v << ")\n";
    } else {
      out << "no witness for " << a << " ~p " << b << '\n';
    }
    if (w_bc) {
      out << b << " ~p " << c << " via (u, v) = (" << w_bc->u << ", "
          << w_bc->v << ")\n";
    } else {
      out << "no witness for " << b << " ~p " << c << '\n';
    }
    if (composed) {
      out << "composed witness (x, y) = (" << composed->u << ", "
          << composed->v << ")\n";
      out << "check: x*y = " << m.product(composed->u, composed->v)
          << ", a = " << a << '\n';
      out << "check: y*x = " << m.product(composed->v, composed->u)
          << ", c = " << c << '\n';
    }
    return status;
  });
}

struct VerifyOptions {
  std::size_t max_order = 4;
  int n_max = 6;
  unsigned jobs = 1;
  bool json_mode = false;
  bool regen_goldens = false;
  std::string goldens = "data/goldens/counts.txt";
};

inline int run_verify(const VerifyOptions& opt, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded("verify", opt.json_mode, out, err, [&] {
    const unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
    const VerificationReport rep =
        verify_theorem(opt.max_order, opt.n_max, jobs);

    EnumerationConfig labeled_probe;
    labeled_probe.dedup = false;
    const std::size_t labeled_cap = labeled_probe.effective_cap();
    std::vector<std::pair<std::size_t, std::size_t>> labeled;
    for (const std::size_t order : rep.orders_checked) {
      if (order > labeled_cap) break;
      EnumerationConfig cfg;
      cfg.order = order;
      cfg.dedup = false;
      cfg.jobs = jobs;
      labeled.emplace_back(order,
                           enumerate_tables(cfg, [](const CayleyTable&) {}));
    }

    json results;
    results["orders_checked"] = rep.orders_checked;
    json per_order;
    for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
      per_order[std::to_string(rep.orders_checked[i])] =
          rep.semigroups_per_order[i];
    }
    results["semigroups_per_order"] = per_order;
    json labeled_json;
    for (const auto& [order, count] : labeled) {
      labeled_json[std::to_string(order)] = count;
    }
    results["labeled_per_order"] = labeled_json;
    json satisfiers = json::array();
    for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
      for (std::size_t j = 0; j < rep.condition_satisfiers[i].size(); ++j) {
        json entry;
        entry["order"] = rep.orders_checked[i];
        entry["n"] = static_cast<int>(j) + 2;
        entry["count"] = rep.condition_satisfiers[i][j];
        satisfiers.push_back(entry);
      }
    }
    results["condition_satisfiers"] = satisfiers;
    results["transitivity_failures"] = rep.transitivity_failures;
    results["witness_compositions_checked"] = rep.witness_compositions_checked;
    results["witness_compositions_failed"] = rep.witness_compositions_failed;
    json violations = json::array();
    for (const auto& v : rep.violations) {
      json entry;
      entry["kind"] = v.composition ? "composition" : "transitivity";
      entry["n"] = v.n;
      entry["triple"] = json::array({v.a, v.b, v.c});
      entry["table"] = detail::table_to_json(v.table);
      violations.push_back(entry);
    }
    results["violations"] = violations;

    bool goldens_ok = true;
    json goldens_json;
    if (opt.regen_goldens) {
      GoldenFixture fixture;
      for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
        fixture.counts[{rep.orders_checked[i], "iso"}] =
            rep.semigroups_per_order[i];
      }
      for (const auto& [order, count] : labeled) {
        fixture.counts[{order, "labeled"}] = count;
      }
      const NontransitiveResult nt = find_nontransitive(opt.max_order, jobs);
      fixture.nontransitive_searched_up_to =
          nt.smallest_order ? *nt.smallest_order : opt.max_order;
      if (nt.smallest_order) {
        fixture.smallest_nontransitive_order = *nt.smallest_order;
        fixture.count_at_that_order = nt.items.size();
      }
      save_goldens(opt.goldens, fixture);
      goldens_json["regenerated"] = true;
    } else {
      const GoldenFixture fixture = load_goldens(opt.goldens);
      json mismatches = json::array();
      auto compare = [&](std::size_t order, const char* filter,
                         std::size_t actual) {
        const std::optional<std::size_t> expected =
            fixture.count(order, filter);
        if (expected && *expected == actual) return;
        json entry;
        entry["order"] = order;
        entry["filter"] = filter;
        entry["expected"] = expected ? json(*expected) : json(nullptr);
        entry["actual"] = actual;
        mismatches.push_back(entry);
      };
      for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
        compare(rep.orders_checked[i], "iso", rep.semigroups_per_order[i]);
      }
      for (const auto& [order, count] : labeled) {
        compare(order, "labeled", count);
      }
      goldens_ok = mismatches.empty();
      goldens_json["checked"] = true;
      goldens_json["match"] = goldens_ok;
      goldens_json["mismatches"] = mismatches;
    }
    results["goldens"] = goldens_json;

    const bool clean = rep.transitivity_failures == 0 &&
                       rep.witness_compositions_failed == 0 && goldens_ok;
    const int status = clean ? 0 : 1;

    if (opt.json_mode) {
      json doc;
      doc["command"] = "verify";
      json input;
      input["max_order"] = opt.max_order;
      input["n_max"] = opt.n_max;
      doc["input"] = input;
      doc["results"] = results;
      detail::emit(out, doc, status);
      return status;
    }

    out << "orders checked:";
    for (const std::size_t order : rep.orders_checked) out << ' ' << order;
    out << '\n';
    out << "semigroups per order (one per isomorphism class):";
    for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
      out << ' ' << rep.orders_checked[i] << '='
          << rep.semigroups_per_order[i];
    }
    out << '\n';
    if (!labeled.empty()) {
      out << "labeled tables per order:";
      for (const auto& [order, count] : labeled) {
        out << ' ' << order << '=' << count;
      }
      out << '\n';
    }
    for (std::size_t i = 0; i < rep.orders_checked.size(); ++i) {
      out << "condition satisfiers at order " << rep.orders_checked[i] << ':';
      for (std::size_t j = 0; j < rep.condition_satisfiers[i].size(); ++j) {
        out << " n=" << (j + 2) << ':' << rep.condition_satisfiers[i][j];
      }
      out << '\n';
    }
    out << "transitivity failures among satisfiers: "
        << rep.transitivity_failures << '\n';
    out << "witness compositions checked: " << rep.witness_compositions_checked
        << '\n';
    out << "witness composition failures: " << rep.witness_compositions_failed
        << '\n';
    for (const auto& v : rep.violations) {
      out << "# violation (" << (v.composition ? "composition" : "transitivity")
          << ") at n=" << v.n << " triple " << v.a << ' ' << v.b << ' ' << v.c
          << '\n';
      out << format_table(v.table);
    }
    if (opt.regen_goldens) {
      out << "goldens: regenerated\n";
    } else {
      out << "goldens: " << (goldens_ok ? "match" : "MISMATCH") << '\n';
    }
    return status;
  });
}

struct FindNontransitiveOptions {
  std::size_t max_order = 5;
  unsigned jobs = 1;
  bool json_mode = false;
};

inline int run_find_nontransitive(const FindNontransitiveOptions& opt,
                                  std::ostream& out, std::ostream& err) {
  return detail::guarded("find-nontransitive", opt.json_mode, out, err, [&] {
    const unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
    const NontransitiveResult res = find_nontransitive(opt.max_order, jobs);

    if (opt.json_mode) {
      json doc;
      doc["command"] = "find-nontransitive";
      doc["input"] = {{"max_order", opt.max_order}};
      json results;
      results["orders_scanned"] = res.orders_scanned;
      results["found"] = res.smallest_order.has_value();
      results["smallest_order"] =
          res.smallest_order ? json(*res.smallest_order) : json(nullptr);
      results["count"] = res.items.size();
      if (!res.smallest_order) results["result"] = "NONE_FOUND";
      json items = json::array();
      for (const auto& item : res.items) {
        json entry;
        entry["table"] = detail::table_to_json(item.table);
        entry["triple"] = json::array({item.a, item.b, item.c});
        items.push_back(entry);
      }
      results["items"] = items;
      doc["results"] = results;
      detail::emit(out, doc, 0);
      return 0;
    }

    if (!res.smallest_order) {
      out << "# no semigroup with non-transitive ~p up to order "
          << opt.max_order << '\n';
      return 0;
    }
    out << "# smallest order with non-transitive ~p: " << *res.smallest_order
        << " (" << res.items.size() << " semigroup"
        << (res.items.size() == 1 ? "" : "s") << ")\n";
    for (const auto& item : res.items) {
      out << "# violating triple: a=" << item.a << " b=" << item.b
          << " c=" << item.c << " (a ~p b, b ~p c, not a ~p c)\n";
      out << format_table(item.table);
    }
    return 0;
  });
}

struct EnumerateOptions {
  std::size_t order = 0;
  std::string filter = "all";
  std::optional<int> n;
  std::optional<int> n_max;
  bool no_dedup = false;
  bool count_only = false;
  unsigned jobs = 1;
  std::optional<std::size_t> order_cap;
  bool json_mode = false;
};

inline int run_enumerate(const EnumerateOptions& opt, std::ostream& out,
                         std::ostream& err) {
  return detail::guarded("enumerate", opt.json_mode, out, err, [&] {
    EnumerationConfig cfg;
    cfg.order = opt.order;
    cfg.dedup = !opt.no_dedup;
    cfg.jobs = opt.jobs == 0 ? 1 : opt.jobs;
    cfg.order_cap = opt.order_cap;
    if (opt.filter == "all") {
      cfg.filter = Filter::all;
    } else if (opt.filter == "commutative") {
      cfg.filter = Filter::commutative;
    } else {
      // CLI11 restricts the value set, so this branch is "condition".
      if (opt.n.has_value() == opt.n_max.has_value()) {
        throw SemiconjError(
            Errc::parse_error,
            "--filter condition needs exactly one of --n or --n-max", {});
      }
      if (opt.n) {
        cfg.filter = Filter::condition;
        cfg.n = *opt.n;
      } else {
        cfg.filter = Filter::condition_any;
        cfg.n_max = *opt.n_max;
      }
    }
    if (opt.filter != "condition" && (opt.n || opt.n_max)) {
      throw SemiconjError(Errc::parse_error,
                          "--n/--n-max only apply to --filter condition", {});
    }

    std::vector<CayleyTable> tables;
    const std::size_t count = enumerate_tables(cfg, [&](const CayleyTable& t) {
      if (!opt.count_only) tables.push_back(t);
    });

    if (opt.json_mode) {
      json doc;
      doc["command"] = "enumerate";
      json input;
      input["order"] = opt.order;
      input["filter"] = opt.filter;
      if (opt.n) input["n"] = *opt.n;
      if (opt.n_max) input["n_max"] = *opt.n_max;
      input["dedup"] = cfg.dedup;
      doc["input"] = input;
      json results;
      results["count"] = count;
      if (!opt.count_only) {
        json list = json::array();
        for (const auto& t : tables) list.push_back(detail::table_to_json(t));
        results["tables"] = list;
      }
      doc["results"] = results;
      detail::emit(out, doc, 0);
      return 0;
    }

    out << "# count: " << count << '\n';
    std::size_t index = 0;
    for (const auto& t : tables) {
      out << "# table " << ++index << " of " << count << '\n';
      out << format_table(t);
    }
    return 0;
  });
}

// Parses args (without the program name) and dispatches. All output goes
// to the given streams; the return value is the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"primary conjugacy on finite semigroups", "semiconj"};
  app.require_subcommand(1);

  CheckOptions check;
  int check_n = 0;
  int check_n_max = 0;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "validate a table and report its structure");
  check_cmd->add_option("file", check.file, "table file")->required();
  CLI::Option* check_n_opt = check_cmd->add_option(
      "--n", check_n, "test the condition xy in {yx, (xy)^n} at this n");
  CLI::Option* check_n_max_opt = check_cmd->add_option(
      "--n-max", check_n_max, "search the smallest workable n up to this");
  check_n_opt->excludes(check_n_max_opt);
  check_n_max_opt->excludes(check_n_opt);
  check_cmd->add_flag("--json", check.json_mode, "structured output");

  ClassesOptions classes;
  CLI::App* classes_cmd = app.add_subcommand(
      "classes", "print ~p pairs, transitivity, and the ~p* classes");
  classes_cmd->add_option("file", classes.file, "table file")->required();
  classes_cmd->add_flag("--json", classes.json_mode, "structured output");

  WitnessOptions witness;
  CLI::App* witness_cmd = app.add_subcommand(
      "witness", "compose witnesses along a chain a ~p b ~p c");
  witness_cmd->add_option("file", witness.file, "table file")->required();
  witness_cmd->add_option("a", witness.a, "chain start")->required();
  witness_cmd->add_option("b", witness.b, "chain middle")->required();
  witness_cmd->add_option("c", witness.c, "chain end")->required();
  witness_cmd->add_option("--n", witness.n, "condition exponent (default 2)");
  witness_cmd->add_flag("--json", witness.json_mode, "structured output");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "check the whole search space: condition satisfiers have transitive "
      "~p and every witness chain composes");
  verify_cmd->add_option("--max-order", verify.max_order,
                         "largest order to enumerate (default 4)");
  verify_cmd->add_option("--n-max", verify.n_max,
                         "largest condition exponent (default 6)");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default 1)");
  verify_cmd->add_flag("--json", verify.json_mode, "structured output");
  verify_cmd->add_flag("--regen-goldens", verify.regen_goldens,
                       "rewrite the golden counts instead of comparing");
  verify_cmd->add_option("--goldens", verify.goldens,
                         "golden counts file (default data/goldens/counts.txt)");

  FindNontransitiveOptions find_nt;
  CLI::App* find_nt_cmd = app.add_subcommand(
      "find-nontransitive",
      "find the smallest semigroups where ~p is not transitive");
  find_nt_cmd->add_option("--max-order", find_nt.max_order,
                          "largest order to scan (default 5)");
  find_nt_cmd->add_option("--jobs", find_nt.jobs,
                          "worker threads (default 1)");
  find_nt_cmd->add_flag("--json", find_nt.json_mode, "structured output");

  EnumerateOptions enumerate;
  int enum_n = 0;
  int enum_n_max = 0;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "emit every semigroup of one order");
  enumerate_cmd->add_option("--order", enumerate.order, "table order")
      ->required();
  enumerate_cmd
      ->add_option("--filter", enumerate.filter,
                   "all, commutative, or condition (default all)")
      ->check(CLI::IsMember({"all", "commutative", "condition"}));
  CLI::Option* enum_n_opt = enumerate_cmd->add_option(
      "--n", enum_n, "fix the condition exponent (with --filter condition)");
  CLI::Option* enum_n_max_opt = enumerate_cmd->add_option(
      "--n-max", enum_n_max,
      "accept any workable exponent up to this (with --filter condition)");
  enum_n_opt->excludes(enum_n_max_opt);
  enum_n_max_opt->excludes(enum_n_opt);
  enumerate_cmd->add_flag("--no-dedup", enumerate.no_dedup,
                          "emit all labeled tables, not one per "
                          "isomorphism class");
  enumerate_cmd->add_flag("--count-only", enumerate.count_only,
                          "print the count, not the tables");
  enumerate_cmd->add_option("--jobs", enumerate.jobs,
                            "worker threads (default 1)");
  std::size_t enum_order_cap = 0;
  CLI::Option* enum_cap_opt = enumerate_cmd->add_option(
      "--order-cap", enum_order_cap, "override the safety cap on the order");
  enumerate_cmd->add_flag("--json", enumerate.json_mode, "structured output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("semiconj");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check_cmd->parsed()) {
      if (check_n_opt->count() > 0) check.n = check_n;
      if (check_n_max_opt->count() > 0) check.n_max = check_n_max;
      return run_check(check, out, err);
    }
    if (classes_cmd->parsed()) return run_classes(classes, out, err);
    if (witness_cmd->parsed()) return run_witness(witness, out, err);
    if (verify_cmd->parsed()) return run_verify(verify, out, err);
    if (find_nt_cmd->parsed()) {
      return run_find_nontransitive(find_nt, out, err);
    }
    if (enumerate_cmd->parsed()) {
      if (enum_n_opt->count() > 0) enumerate.n = enum_n;
      if (enum_n_max_opt->count() > 0) enumerate.n_max = enum_n_max;
      if (enum_cap_opt->count() > 0) enumerate.order_cap = enum_order_cap;
      return run_enumerate(enumerate, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace semiconj::cli

#include "polynil/cli.hpp"

#include "polynil/errors.hpp"
#include "polynil/group_expr.hpp"
#include "polynil/hall.hpp"
#include "polynil/multiplier.hpp"
#include "polynil/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace polynil {

namespace {

std::string f_index(const BigInt& m, std::size_t j) { return to_decimal(m + BigInt(j)); }

void print_big(std::ostream& out, const BigInt& value, bool scientific) {
  out << to_decimal(value);
  if (scientific) {
    const std::string hint = magnitude_hint(value);
    if (!hint.empty()) out << " (" << hint << ")";
  }
}

void print_report_text(std::ostream& out, const MultiplierReport& report, bool scientific) {
  out << "input:          " << render_group(report.input_group) << "\n";
  out << "class row:      " << report.class_row.to_string() << "\n";
  out << "f-values:       ";
  for (std::size_t j = 0; j < report.f_values.size(); ++j) {
    if (j) out << ", ";
    out << "f_" << f_index(report.input_group.free_rank(), j) << " = ";
    print_big(out, report.f_values[j], scientific);
  }
  out << "\n";
  out << "multiplicities: ";
  for (std::size_t j = 0; j < report.multiplicities.size(); ++j) {
    if (j) out << ", ";
    print_big(out, report.multiplicities[j], scientific);
  }
  out << "\n";
  out << "shape:          " << shaped_sum_string(report) << "\n";
  out << "canonical:      " << render_group(report.result) << "\n";
}

void print_report_json(std::ostream& out, const MultiplierReport& report) {
  nlohmann::ordered_json doc;
  doc["free_rank"] = to_decimal(report.result.free_rank());
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const BigInt& factor : report.result.invariant_factors()) {
    factors.push_back(to_decimal(factor));
  }
  doc["invariant_factors"] = std::move(factors);
  nlohmann::ordered_json f_values = nlohmann::ordered_json::array();
  for (const BigCount& value : report.f_values) f_values.push_back(to_decimal(value));
  doc["f_values"] = std::move(f_values);
  nlohmann::ordered_json multiplicities = nlohmann::ordered_json::array();
  for (const BigCount& value : report.multiplicities) {
    multiplicities.push_back(to_decimal(value));
  }
  doc["multiplicities"] = std::move(multiplicities);
  doc["paper_shape"] = shaped_sum_string(report);
  out << doc.dump() << "\n";
}

}  // namespace

int print_outcomes(std::vector<CheckOutcome> outcomes, std::ostream& out) {
  std::sort(outcomes.begin(), outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.instance < b.instance;
  });
  std::size_t failures = 0;
  for (const CheckOutcome& outcome : outcomes) {
    if (outcome.pass) {
      out << "ok    " << outcome.name << "  [" << outcome.instance << "]\n";
    } else {
      ++failures;
      out << "FAIL  " << outcome.name << "  [" << outcome.instance << "]  expected "
          << outcome_value_string(outcome.expected) << ", got "
          << outcome_value_string(outcome.actual) << "\n";
    }
  }
  out << "verify: " << outcomes.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynilpotent multipliers of finitely generated abelian groups"};
  app.name("polynil");
  app.require_subcommand(1);

  // multiplier
  auto* multiplier_cmd =
      app.add_subcommand("multiplier", "Compute a multiplier of a f.g. abelian group");
  std::string group_text;
  std::string class_row_text;
  unsigned nilpotent_class = 0;
  unsigned solvable_length = 0;
  bool as_json = false;
  bool scientific = false;
  multiplier_cmd->add_option("--group", group_text, "Group expression, e.g. \"Z^2 + Z/12\"")
      ->required();
  auto* row_opt = multiplier_cmd->add_option("--class-row", class_row_text,
                                             "Polynilpotent class row c1,c2,...");
  auto* nil_opt = multiplier_cmd->add_option("--nilpotent", nilpotent_class,
                                             "Nilpotent multiplier of this class");
  auto* sol_opt = multiplier_cmd->add_option("--solvable", solvable_length,
                                             "Solvable multiplier of this length");
  row_opt->excludes(nil_opt)->excludes(sol_opt);
  nil_opt->excludes(sol_opt);
  multiplier_cmd->add_flag("--json", as_json, "Emit a JSON document");
  multiplier_cmd->add_flag("--scientific", scientific, "Append magnitude hints to big values");

  // witt
  auto* witt_cmd = app.add_subcommand("witt", "Exact basic-commutator counts (Witt formula)");
  unsigned witt_weight = 0;
  std::string witt_row_text;
  std::string witt_letters_text;
  auto* weight_opt = witt_cmd->add_option("--weight", witt_weight, "Commutator weight (>= 1)");
  auto* witt_row_opt =
      witt_cmd->add_option("--row", witt_row_text, "Class row for the iterated count");
  weight_opt->excludes(witt_row_opt);
  witt_cmd->add_option("--letters", witt_letters_text, "Number of free generators (>= 0)")
      ->required();

  // hall enumerate / hall sets
  auto* hall_cmd = app.add_subcommand("hall", "Enumerate basic commutators and invertator sets");
  hall_cmd->require_subcommand(1);
  auto* enumerate_cmd = hall_cmd->add_subcommand("enumerate", "List basic commutators");
  std::size_t hall_letters = 0;
  unsigned hall_weight = 0;
  std::size_t hall_cap = EnumerationLimits{}.max_elements;
  enumerate_cmd->add_option("--letters", hall_letters, "Number of free generators (>= 1)")
      ->required();
  enumerate_cmd->add_option("--weight", hall_weight, "Commutator weight (>= 1)")->required();
  enumerate_cmd->add_option("--cap", hall_cap, "Element cap for the enumeration");
  auto* sets_cmd = hall_cmd->add_subcommand("sets", "List A_{m,k} for m <= k < n and B_{m,n}");
  unsigned sets_m = 0;
  unsigned sets_n = 0;
  std::size_t sets_letters = 0;
  unsigned sets_weight_cap = 0;
  sets_cmd->add_option("--m", sets_m, "Component weight bound m (>= 2)")->required();
  sets_cmd->add_option("--n", sets_n, "Window weight n (>= m)")->required();
  sets_cmd->add_option("--letters", sets_letters, "Number of free generators (>= 1)")->required();
  sets_cmd->add_option("--cap", sets_weight_cap, "Total-weight cap for B_{m,n} (>= n)")
      ->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification sweeps");
  verify_cmd->require_subcommand(1);
  auto* schur_cmd = verify_cmd->add_subcommand(
      "schur", "Formula vs exterior square vs recursion on every small group");
  unsigned max_rank = 0;
  unsigned max_factor = 0;
  schur_cmd->add_option("--max-rank", max_rank, "Free rank + factor count bound")->required();
  schur_cmd->add_option("--max-factor", max_factor, "Leading invariant factor bound")->required();
  auto* counts_cmd = verify_cmd->add_subcommand("counts", "Enumeration vs the Witt formula");
  unsigned max_d = 0;
  unsigned max_weight = 0;
  counts_cmd->add_option("--max-d", max_d, "Letter bound")->required();
  counts_cmd->add_option("--max-weight", max_weight, "Weight bound")->required();
  auto* iterated_cmd =
      verify_cmd->add_subcommand("iterated", "Iterated set sizes vs iterated Witt values");
  std::vector<std::string> row_texts;
  unsigned iterated_max_d = 0;
  iterated_cmd->add_option("--rows", row_texts, "Class rows, e.g. --rows 1,1 --rows 2,1")
      ->required();
  iterated_cmd->add_option("--max-d", iterated_max_d, "Letter bound")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << "polynil: error[usage]: " << error.what() << "\n";
    return kExitUsage;
  }

  try {
    if (multiplier_cmd->parsed()) {
      const FgAbelianGroup group = parse_group(group_text);
      MultiplierReport report = [&]() {
        if (*row_opt) return polynilpotent_multiplier(group, ClassRow::parse(class_row_text));
        if (*nil_opt) return nilpotent_multiplier(group, nilpotent_class);
        if (*sol_opt) return solvable_multiplier(group, solvable_length);
        throw std::invalid_argument("one of --class-row, --nilpotent, --solvable is required");
      }();
      if (as_json) {
        print_report_json(out, report);
      } else {
        print_report_text(out, report, scientific);
      }
      return kExitOk;
    }

    if (witt_cmd->parsed()) {
      const BigInt letters = parse_decimal(witt_letters_text);
      if (*weight_opt) {
        out << to_decimal(witt(witt_weight, letters)) << "\n";
      } else if (*witt_row_opt) {
        out << to_decimal(iterated_witt(ClassRow::parse(witt_row_text), letters)) << "\n";
      } else {
        throw std::invalid_argument("one of --weight, --row is required");
      }
      return kExitOk;
    }

    if (enumerate_cmd->parsed()) {
      const EnumerationLimits limits{hall_cap};
      for (const Commutator& c : enumerate_basic(Alphabet::base(hall_letters), hall_weight,
                                                 limits)) {
        out << c.to_string() << "\n";
      }
      return kExitOk;
    }

    if (sets_cmd->parsed()) {
      const Alphabet alphabet = Alphabet::base(sets_letters);
      for (unsigned k = sets_m; k < sets_n; ++k) {
        const std::vector<Commutator> a_set = generate_a_set(sets_m, k, alphabet);
        out << "A_{" << sets_m << "," << k << "}: " << a_set.size() << " elements\n";
        for (const Commutator& c : a_set) out << "  " << c.to_string() << "\n";
      }
      const std::vector<StandardInvertator> b_set =
          generate_b_set(sets_m, sets_n, alphabet, sets_weight_cap);
      out << "B_{" << sets_m << "," << sets_n << "} (weight <= " << sets_weight_cap
          << "): " << b_set.size() << " elements\n";
      for (const StandardInvertator& word : b_set) out << "  " << word.to_string() << "\n";
      return kExitOk;
    }

    if (schur_cmd->parsed()) {
      return print_outcomes(sweep_schur(max_rank, max_factor), out);
    }
    if (counts_cmd->parsed()) {
      return print_outcomes(sweep_counts(max_d, max_weight), out);
    }
    if (iterated_cmd->parsed()) {
      std::vector<ClassRow> rows;
      rows.reserve(row_texts.size());
      for (const std::string& text : row_texts) rows.push_back(ClassRow::parse(text));
      return print_outcomes(sweep_iterated(rows, iterated_max_d), out);
    }

    err << "polynil: error[usage]: no subcommand selected\n";
    return kExitUsage;
  } catch (const GroupParseError& error) {
    err << "polynil: error[parse]: " << error.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& error) {
    err << "polynil: error[resource]: " << error.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& error) {
    err << "polynil: error[usage]: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "polynil: error[internal]: " << error.what() << "\n";
    return 70;
  }
}

}  // namespace polynil

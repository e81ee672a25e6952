#include "polynil/group_expr.hpp"

#include <cctype>
#include <string_view>
#include <utility>
#include <vector>

namespace polynil {

namespace {

class ExpressionScanner {
 public:
  explicit ExpressionScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t position() {
    skip_ws();
    return pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& detail) {
    throw GroupParseError(at, detail);
  }

  // decimal digits, arbitrary length
  BigInt unsigned_int(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(start, std::string("expected ") + what);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// exponent after '^': uint or (uint), both >= 1
BigInt parse_exponent(ExpressionScanner& scan) {
  const bool parenthesized = scan.eat('(');
  const std::size_t at = scan.position();
  BigInt value = scan.unsigned_int("an exponent");
  if (value < 1) scan.fail(at, "exponent must be >= 1");
  if (parenthesized && !scan.eat(')')) scan.fail(scan.position(), "expected ')'");
  return value;
}

}  // namespace

FgAbelianGroup parse_group(const std::string& text) {
  ExpressionScanner scan{text};
  BigInt free_rank = 0;
  std::vector<FactorRun> runs;

  auto parse_term = [&]() {
    if (scan.eat('0')) return;  // trivial summand
    const std::size_t term_at = scan.position();
    if (!scan.eat('Z')) scan.fail(term_at, "expected 'Z' or '0'");
    if (scan.eat('^')) {
      free_rank += parse_exponent(scan);
      return;
    }
    if (scan.eat('/') || scan.eat('_')) {
      const std::size_t modulus_at = scan.position();
      const BigInt modulus = scan.unsigned_int("a modulus");
      if (modulus == 0) {
        scan.fail(modulus_at, "Z/0 is not a finite cyclic group; write 'Z' for an "
                              "infinite cyclic summand");
      }
      BigInt multiplicity = 1;
      if (scan.eat('^')) multiplicity = parse_exponent(scan);
      if (modulus > 1) runs.push_back({modulus, multiplicity});
      return;
    }
    free_rank += 1;
  };

  parse_term();
  while (!scan.at_end()) {
    if (!scan.eat('+')) scan.fail(scan.position(), "expected '+' or end of input");
    parse_term();
  }
  return FgAbelianGroup::from_runs(free_rank, std::move(runs));
}

std::string render_group(const FgAbelianGroup& group, const GroupRenderOptions& options) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };

  if (group.free_rank() == 1) {
    append("Z");
  } else if (group.free_rank() > 1) {
    append("Z^" + to_decimal(group.free_rank()));
  }

  const bool expand = group.torsion_term_count() <= options.max_expanded_terms;
  for (const FactorRun& run : group.torsion_runs()) {
    if (expand) {
      for (BigInt i = 0; i < run.count; ++i) append("Z/" + to_decimal(run.factor));
    } else if (run.count == 1) {
      append("Z/" + to_decimal(run.factor));
    } else {
      append("Z/" + to_decimal(run.factor) + "^(" + to_decimal(run.count) + ")");
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace polynil

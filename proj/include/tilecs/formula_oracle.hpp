#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilecs/bfs.hpp"

namespace tilecs {

enum class FormKind { piecewise_linear, shift_recurrence, homogeneous_recurrence, floor_form };

std::string to_string(FormKind k);

// A closed form or recurrence for a(n). Which fields matter depends on kind:
//   piecewise_linear        a(m*k + r) = alpha_r * k + beta_r
//   shift_recurrence        a(n + s) = a(n) + c for n >= threshold
//   homogeneous_recurrence  a(n) = sum_i coefficients[i-1] * a(n - i) for n >= threshold
//   floor_form              a(n) = floor((p*n + 1) / q) for n >= 1
// Exceptions override the form; recurrences take their seeds from them.
struct ClosedFormSpec {
  std::string name;
  FormKind kind = FormKind::piecewise_linear;
  int modulus = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> residues;  // (alpha_r, beta_r), r = 0..m-1
  int shift = 1;
  std::int64_t constant = 0;
  int threshold = 0;
  std::vector<std::int64_t> coefficients;
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::vector<std::pair<int, std::int64_t>> exceptions;  // sorted by n

  // Throws InvalidArgument when the shape invariants are broken.
  void check() const;
};

struct VerifyReport {
  bool pass = true;
  int from = 0;
  int to = -1;  // inclusive range checked
  struct Mismatch {
    int n;
    std::int64_t expected;
    std::int64_t got;
  };
  std::optional<Mismatch> first_mismatch;
  std::string error;  // set when the form could not be evaluated

  std::string to_text() const;
  std::string to_json() const;
};

// Value at n. Throws InvalidArgument for n < 0, for floor forms at n = 0
// without an exception, and for recurrences lacking a seed.
std::int64_t eval_closed_form(const ClosedFormSpec& form, int n);
// Values a(0..n_max), computed in one pass.
std::vector<std::int64_t> eval_range(const ClosedFormSpec& form, int n_max);

VerifyReport verify_against(const CoordSeq& seq, const ClosedFormSpec& form, int from = 0);

struct FormBinding {
  std::string tiling;
  std::string base;
  std::vector<ClosedFormSpec> forms;
};

// Every known closed form, grouped by (tiling, base) in catalog order.
const std::vector<FormBinding>& builtin_forms();
const FormBinding* find_forms(const std::string& tiling, const std::string& base);

// Grand total of the eight-row sector tally for 3.12^2 at distance n >= 3:
// rows (i) + (ii) + 2 * (rows (iii)..(viii)),
// written with k = n div 8 and n mod 8.
std::int64_t sector_tally_total(int n);
// Row values (i)..(viii) of that tally.
std::vector<std::int64_t> sector_tally_rows(int n);

std::string form_to_json(const ClosedFormSpec& form);

}  // namespace tilecs

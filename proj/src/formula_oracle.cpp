#include "tilecs/formula_oracle.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tilecs/error.hpp"

namespace tilecs {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::piecewise_linear: return "piecewise_linear";
    case FormKind::shift_recurrence: return "shift_recurrence";
    case FormKind::homogeneous_recurrence: return "homogeneous_recurrence";
    case FormKind::floor_form: return "floor_form";
  }
  return "?";
}

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("closed form value overflows");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("closed form value overflows");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

}  // namespace

void ClosedFormSpec::check() const {
  for (std::size_t k = 1; k < exceptions.size(); ++k)
    if (exceptions[k - 1].first >= exceptions[k].first)
      throw InvalidArgument(name + ": exceptions must be sorted and distinct");
  if (!exceptions.empty() && exceptions.front().first < 0)
    throw InvalidArgument(name + ": negative exception index");
  if (threshold < 0)
    throw InvalidArgument(name + ": negative threshold");
  switch (kind) {
    case FormKind::piecewise_linear:
      if (modulus < 1 || residues.size() != static_cast<std::size_t>(modulus))
        throw InvalidArgument(name + ": need exactly one (alpha, beta) per residue");
      break;
    case FormKind::shift_recurrence:
      if (shift < 1)
        throw InvalidArgument(name + ": shift must be positive");
      break;
    case FormKind::homogeneous_recurrence:
      if (coefficients.empty())
        throw InvalidArgument(name + ": empty coefficient list");
      break;
    case FormKind::floor_form:
      if (q <= 0)
        throw InvalidArgument(name + ": floor form needs q > 0");
      break;
  }
}

std::vector<std::int64_t> eval_range(const ClosedFormSpec& f, int n_max) {
  if (n_max < 0)
    throw InvalidArgument("index must be non-negative");
  f.check();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n_max) + 1);
  auto exc = f.exceptions.begin();
  for (int n = 0; n <= n_max; ++n) {
    while (exc != f.exceptions.end() && exc->first < n)
      ++exc;
    std::int64_t& v = a[static_cast<std::size_t>(n)];
    if (exc != f.exceptions.end() && exc->first == n) {
      v = exc->second;
      continue;
    }
    switch (f.kind) {
      case FormKind::piecewise_linear: {
        auto [alpha, beta] = f.residues[static_cast<std::size_t>(n % f.modulus)];
        v = add(mul(alpha, n / f.modulus), beta);
        break;
      }
      case FormKind::floor_form:
        if (n < 1)
          throw InvalidArgument(f.name + ": floor form is defined for n >= 1 only");
        v = floor_div(add(mul(f.p, n), 1), f.q);
        break;
      case FormKind::shift_recurrence:
        if (n < f.threshold + f.shift)
          throw InvalidArgument(f.name + ": missing seed value a(" + std::to_string(n) + ")");
        v = add(a[static_cast<std::size_t>(n - f.shift)], f.constant);
        break;
      case FormKind::homogeneous_recurrence: {
        int d = static_cast<int>(f.coefficients.size());
        if (n < f.threshold || n < d)
          throw InvalidArgument(f.name + ": missing seed value a(" + std::to_string(n) + ")");
        std::int64_t s = 0;
        for (int i = 1; i <= d; ++i)
          s = add(s, mul(f.coefficients[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(n - i)]));
        v = s;
        break;
      }
    }
  }
  return a;
}

std::int64_t eval_closed_form(const ClosedFormSpec& form, int n) {
  if (n < 0)
    throw InvalidArgument("index must be non-negative");
  return eval_range(form, n).back();
}

VerifyReport verify_against(const CoordSeq& seq, const ClosedFormSpec& form, int from) {
  VerifyReport r;
  r.from = std::max(from, 0);
  r.to = static_cast<int>(seq.terms.size()) - 1;
  if (r.to < r.from)
    return r;
  std::vector<std::int64_t> want;
  try {
    want = eval_range(form, r.to);
  } catch (const Error& e) {
    r.pass = false;
    r.error = e.what();
    return r;
  }
  for (int n = r.from; n <= r.to; ++n) {
    auto k = static_cast<std::size_t>(n);
    if (want[k] != seq.terms[k]) {
      r.pass = false;
      r.first_mismatch = VerifyReport::Mismatch{n, want[k], seq.terms[k]};
      break;
    }
  }
  return r;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << (pass ? "pass" : "FAIL") << " on n=" << from << ".." << to;
  if (first_mismatch)
    out << ", first mismatch at n=" << first_mismatch->n << ": expected " << first_mismatch->expected << ", got "
        << first_mismatch->got;
  if (!error.empty())
    out << ", error: " << error;
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["range"] = {from, to};
  if (first_mismatch)
    j["first_mismatch"] = {{"n", first_mismatch->n}, {"expected", first_mismatch->expected},
                           {"got", first_mismatch->got}};
  else
    j["first_mismatch"] = nullptr;
  if (!error.empty())
    j["error"] = error;
  return j.dump();
}

std::string form_to_json(const ClosedFormSpec& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["kind"] = to_string(f.kind);
  switch (f.kind) {
    case FormKind::piecewise_linear: {
      j["modulus"] = f.modulus;
      auto res = nlohmann::ordered_json::array();
      for (auto [alpha, beta] : f.residues)
        res.push_back({alpha, beta});
      j["residues"] = res;
      break;
    }
    case FormKind::shift_recurrence:
      j["shift"] = f.shift;
      j["constant"] = f.constant;
      j["threshold"] = f.threshold;
      break;
    case FormKind::homogeneous_recurrence:
      j["coefficients"] = f.coefficients;
      j["threshold"] = f.threshold;
      break;
    case FormKind::floor_form:
      j["p"] = f.p;
      j["q"] = f.q;
      break;
  }
  auto exc = nlohmann::ordered_json::array();
  for (auto [n, v] : f.exceptions)
    exc.push_back({n, v});
  j["exceptions"] = exc;
  return j.dump();
}

namespace {

using Exc = std::vector<std::pair<int, std::int64_t>>;

Exc seeds(std::initializer_list<std::int64_t> values) {
  Exc e;
  int n = 0;
  for (auto v : values)
    e.emplace_back(n++, v);
  return e;
}

ClosedFormSpec piecewise(std::string name, std::vector<std::pair<std::int64_t, std::int64_t>> residues, Exc exc) {
  ClosedFormSpec f;
  f.name = std::move(name);
  f.kind = FormKind::piecewise_linear;
  f.modulus = static_cast<int>(residues.size());
  f.residues = std::move(residues);
  f.exceptions = std::move(exc);
  return f;
}

ClosedFormSpec shift_rec(std::string name, int s, std::int64_t c, int n0, Exc exc) {
  ClosedFormSpec f;
  f.name = std::move(name);
  f.kind = FormKind::shift_recurrence;
  f.shift = s;
  f.constant = c;
  f.threshold = n0;
  f.exceptions = std::move(exc);
  return f;
}

ClosedFormSpec homogeneous(std::string name, std::vector<std::int64_t> coeffs, int n0, Exc exc) {
  ClosedFormSpec f;
  f.name = std::move(name);
  f.kind = FormKind::homogeneous_recurrence;
  f.coefficients = std::move(coeffs);
  f.threshold = n0;
  f.exceptions = std::move(exc);
  return f;
}

ClosedFormSpec floor_form(std::string name, std::int64_t p, std::int64_t q, Exc exc) {
  ClosedFormSpec f;
  f.name = std::move(name);
  f.kind = FormKind::floor_form;
  f.p = p;
  f.q = q;
  f.exceptions = std::move(exc);
  return f;
}

std::vector<FormBinding> make_builtins() {
  const std::vector<std::int64_t> snub_period = {0, 0, 2, 0, 0, -1};
  const char* snub_rec = "a(n) = 2a(n-3) - a(n-6), n >= 8";
  return {
      {"square_44", "vertex",
       {piecewise("a(n) = 4n, n >= 1", {{4, 0}}, {{0, 1}}),
        shift_rec("a(n+1) = a(n) + 4, n >= 1", 1, 4, 1, seeds({1, 4}))}},
      {"cairo", "tetravalent", {piecewise("a(n) = 4n, n >= 1", {{4, 0}}, {{0, 1}})}},
      {"cairo", "trivalent",
       {piecewise("a(n) = 4n - 1, 4n, 4n + 1, 4n by n mod 4, n >= 3", {{16, -1}, {16, 4}, {16, 9}, {16, 12}},
                  seeds({1, 3, 8})),
        shift_rec("a(n+4) = a(n) + 16, n >= 3", 4, 16, 3, seeds({1, 3, 8, 12, 15, 20, 25}))}},
      {"t32434", "vertex",
       {piecewise("a(3k) = 16k, a(3k+1) = 16k + 5, a(3k+2) = 16k + 11", {{16, 0}, {16, 5}, {16, 11}}, {{0, 1}}),
        floor_form("a(n) = floor((16n + 1)/3), n >= 1", 16, 3, {{0, 1}}),
        shift_rec("a(n+3) = a(n) + 16, n >= 1", 3, 16, 1, seeds({1, 5, 11, 16}))}},
      {"t3464", "vertex",
       {piecewise("a(n) = 4n, n >= 1", {{4, 0}}, {{0, 1}}),
        shift_rec("a(n+3) = a(n) + 12, n >= 2", 3, 12, 2, seeds({1, 4, 8, 12, 16}))}},
      {"t488", "vertex",
       {piecewise("a(3k) = 8k, a(3k+1) = 8k + 3, a(3k+2) = 8k + 5", {{8, 0}, {8, 3}, {8, 5}}, {{0, 1}}),
        shift_rec("a(n+3) = a(n) + 8, n >= 2", 3, 8, 2, seeds({1, 3, 5, 8, 11}))}},
      {"t31212", "vertex",
       {piecewise("a(4k) = 10k - 2, a(4k+1) = 9k + 3, a(4k+2) = 8k + 6, a(4k+3) = 9k + 6",
                  {{10, -2}, {9, 3}, {8, 6}, {9, 6}}, seeds({1, 3, 4}))}},
      {"t346", "vertex",
       {shift_rec("a(n+5) = a(n) + 24, n >= 3", 5, 24, 3, seeds({1, 5, 9, 15, 19, 24, 29, 33})),
        piecewise("a(5k+r) = 24k + a(r), n >= 1", {{24, 0}, {24, 5}, {24, 9}, {24, 15}, {24, 19}}, {{0, 1}})}},
      {"snub632", "hexavalent",
       {piecewise("a(3k) = 12k, a(3k+1) = 18k + 6, a(3k+2) = 24k + 12, k >= 1", {{12, 0}, {18, 6}, {24, 12}},
                  seeds({1, 6, 12})),
        homogeneous(snub_rec, snub_period, 8, seeds({1, 6, 12, 12, 24, 36, 24, 42}))}},
      {"snub632", "trivalent_3fold",
       {piecewise("a(3k) = 18k - 3, a(3k+1) = 24k, a(3k+2) = 12k + 6, k >= 2", {{18, -3}, {24, 0}, {12, 6}},
                  seeds({1, 3, 6, 15, 24, 18})),
        homogeneous(snub_rec, snub_period, 8, seeds({1, 3, 6, 15, 24, 18, 33, 48}))}},
      {"snub632", "trivalent_asym",
       {piecewise("a(3k) = 20k - 3, a(3k+1) = 17k + 3, a(3k+2) = 17k + 10, k >= 2", {{20, -3}, {17, 3}, {17, 10}},
                  seeds({1, 3, 9, 15, 18, 27})),
        homogeneous(snub_rec, snub_period, 8, seeds({1, 3, 9, 15, 18, 27, 37, 37}))}},
  };
}

}  // namespace

const std::vector<FormBinding>& builtin_forms() {
  static const std::vector<FormBinding> forms = make_builtins();
  return forms;
}

const FormBinding* find_forms(const std::string& tiling, const std::string& base) {
  for (const auto& b : builtin_forms())
    if (b.tiling == tiling && b.base == base)
      return &b;
  return nullptr;
}

std::vector<std::int64_t> sector_tally_rows(int n) {
  if (n < 3)
    throw InvalidArgument("sector tally needs n >= 3");
  const std::int64_t k = n / 8;
  switch (n % 8) {
    case 0: return {4, 2, k, 2 * k - 1, 2 * k - 1, k, 2 * k - 1, 2 * k - 1};
    case 1: return {6, 3, k, 2 * k - 1, 2 * k - 1, k, 2 * k - 1, k};
    case 2: return {6, 4, k, 2 * k - 1, k, k, 2 * k - 1, k};
    case 3: return {4, 4, k, 2 * k - 1, k, k, 2 * k, 2 * k};
    case 4: return {4, 4, k, 2 * k, 2 * k, k, 2 * k, 2 * k};
    case 5: return {6, 4, k, 2 * k, 2 * k, k + 1, 2 * k, k};
    case 6: return {6, 4, k + 1, 2 * k, k, k + 1, 2 * k, k};
    default: return {4, 3, k + 1, 2 * k, k, k + 1, 2 * k + 1, 2 * k + 1};
  }
}

std::int64_t sector_tally_total(int n) {
  auto rows = sector_tally_rows(n);
  std::int64_t total = rows[0] + rows[1];
  for (std::size_t r = 2; r < rows.size(); ++r)
    total += 2 * rows[r];
  return total;
}

}  // namespace tilecs

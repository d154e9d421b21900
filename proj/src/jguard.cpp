#include "hsg/jguard.hpp"

#include <algorithm>
#include <set>

#include "hsg/category.hpp"
#include "hsg/error.hpp"

namespace hsg::jguard {

// --- parser -------------------------------------------------------------------

namespace {

struct Tokenizer {
  const std::string &text;
  std::size_t pos = 0;

  explicit Tokenizer(const std::string &t) : text(t) {}

  std::optional<std::string> next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
    if (pos >= text.size())
      return std::nullopt;
    if (text[pos] == '(' || text[pos] == ')')
      return std::string(1, text[pos++]);
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\n' && text[pos] != '\r' && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }
};

bool is_integer(const std::string &s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

CmpOp parse_op(const std::string &s) {
  if (s == "<")
    return CmpOp::lt;
  if (s == "<=" || s == "≤")
    return CmpOp::le;
  if (s == "=" || s == "==")
    return CmpOp::eq;
  if (s == "!=" || s == "≠")
    return CmpOp::ne;
  if (s == ">=" || s == "≥")
    return CmpOp::ge;
  if (s == ">")
    return CmpOp::gt;
  fail(ErrorCode::malformed_input, "guard: unknown comparator " + s);
}

const char *op_symbol(CmpOp op) {
  switch (op) {
  case CmpOp::lt:
    return "<";
  case CmpOp::le:
    return "≤";
  case CmpOp::eq:
    return "=";
  case CmpOp::ne:
    return "≠";
  case CmpOp::ge:
    return "≥";
  case CmpOp::gt:
    return ">";
  }
  return "?";
}

GuardPtr parse_expr(Tokenizer &tz) {
  auto tok = tz.next();
  if (!tok)
    fail(ErrorCode::malformed_input, "guard: unexpected end of input");
  if (*tok != "(")
    fail(ErrorCode::malformed_input, "guard: expected '(' but found " + *tok);
  auto head = tz.next();
  if (!head || *head == "(" || *head == ")")
    fail(ErrorCode::malformed_input, "guard: expected an operator name");

  auto expr = std::make_shared<GuardExpr>();
  auto expect_close = [&]() {
    auto t = tz.next();
    if (!t || *t != ")")
      fail(ErrorCode::malformed_input,
           "guard: expected ')' to close (" + *head + " ...)");
  };

  if (*head == "true" || *head == "false") {
    expr->kind = GuardExpr::Kind::truth;
    expr->truth_value = (*head == "true");
    expect_close();
  } else if (*head == "delta_is") {
    auto v = tz.next();
    if (!v || (*v != "⊤" && *v != "⊥"))
      fail(ErrorCode::malformed_input, "guard: delta_is takes ⊤ or ⊥");
    expr->kind = GuardExpr::Kind::delta_is;
    expr->delta_value = (*v == "⊤");
    expect_close();
  } else if (*head == "coord_cmp") {
    auto axis = tz.next();
    auto op = tz.next();
    auto value = tz.next();
    if (!axis || !op || !value)
      fail(ErrorCode::malformed_input,
           "guard: coord_cmp takes axis, comparator, value");
    expr->kind = GuardExpr::Kind::coord_cmp;
    expr->axis = *axis;
    expr->op = parse_op(*op);
    if (is_integer(*value))
      expr->cmp_value = static_cast<long long>(std::stoll(*value));
    else
      expr->cmp_value = *value;
    expect_close();
  } else if (*head == "reachable_within") {
    auto t = tz.next();
    if (!t || !is_integer(*t))
      fail(ErrorCode::malformed_input,
           "guard: reachable_within takes an integer tick");
    expr->kind = GuardExpr::Kind::reachable_within;
    expr->horizon = std::stoll(*t);
    expect_close();
  } else if (*head == "and" || *head == "or" || *head == "not") {
    expr->kind = (*head == "and")  ? GuardExpr::Kind::conj
                 : (*head == "or") ? GuardExpr::Kind::disj
                                   : GuardExpr::Kind::neg;
    while (true) {
      // peek for ')'
      std::size_t save = tz.pos;
      auto t = tz.next();
      if (!t)
        fail(ErrorCode::malformed_input, "guard: unterminated (" + *head);
      if (*t == ")")
        break;
      tz.pos = save;
      expr->children.push_back(parse_expr(tz));
    }
    if (expr->children.empty())
      fail(ErrorCode::malformed_input, "guard: (" + *head + ") needs operands");
    if (expr->kind == GuardExpr::Kind::neg && expr->children.size() != 1)
      fail(ErrorCode::malformed_input, "guard: (not ...) takes one operand");
  } else {
    fail(ErrorCode::malformed_input, "guard: unknown form (" + *head + " ...)");
  }
  return expr;
}

} // namespace

GuardPtr parse_guard(const std::string &text) {
  Tokenizer tz(text);
  GuardPtr e = parse_expr(tz);
  if (tz.next())
    fail(ErrorCode::malformed_input, "guard: trailing input after expression");
  return e;
}

std::string print_guard(const GuardExpr &e) {
  switch (e.kind) {
  case GuardExpr::Kind::truth:
    return e.truth_value ? "(true)" : "(false)";
  case GuardExpr::Kind::delta_is:
    return std::string("(delta_is ") + (e.delta_value ? "⊤" : "⊥") + ")";
  case GuardExpr::Kind::coord_cmp:
    return "(coord_cmp " + e.axis + " " + op_symbol(e.op) + " " +
           grid::value_to_string(e.cmp_value) + ")";
  case GuardExpr::Kind::reachable_within:
    return "(reachable_within " + std::to_string(e.horizon) + ")";
  case GuardExpr::Kind::conj:
  case GuardExpr::Kind::disj:
  case GuardExpr::Kind::neg: {
    std::string out = "(";
    out += (e.kind == GuardExpr::Kind::conj)  ? "and"
           : (e.kind == GuardExpr::Kind::disj) ? "or"
                                               : "not";
    for (const auto &c : e.children)
      out += " " + print_guard(*c);
    return out + ")";
  }
  }
  return "(?)";
}

// --- validation and evaluation --------------------------------------------------

namespace {

void validate_expr(const GuardExpr &e, const GuardContext &ctx, Report &report) {
  switch (e.kind) {
  case GuardExpr::Kind::truth:
  case GuardExpr::Kind::delta_is:
    break;
  case GuardExpr::Kind::coord_cmp: {
    const grid::Axis *a = ctx.g->axis(e.axis);
    if (!a) {
      report.add("guard-axis", "coord_cmp references unknown axis " + e.axis,
                 "guard");
      break;
    }
    const bool value_is_int = std::holds_alternative<long long>(e.cmp_value);
    if ((a->type == grid::IndexType::integer) != value_is_int)
      report.add("guard-type",
                 "coord_cmp value type does not match axis " + e.axis, "guard");
    if (a->type == grid::IndexType::symbol && e.op != CmpOp::eq &&
        e.op != CmpOp::ne)
      report.add("guard-type",
                 "symbolic axis " + e.axis + " only supports = and ≠", "guard");
    break;
  }
  case GuardExpr::Kind::reachable_within:
    if (!ctx.dep || !ctx.time)
      report.add("guard-context",
                 "reachable_within needs a dependency graph and a time axis",
                 "guard");
    break;
  case GuardExpr::Kind::conj:
  case GuardExpr::Kind::disj:
  case GuardExpr::Kind::neg:
    for (const auto &c : e.children)
      validate_expr(*c, ctx, report);
    break;
  }
}

bool eval_expr(const GuardExpr &e, const GuardContext &ctx,
               const std::string &token) {
  switch (e.kind) {
  case GuardExpr::Kind::truth:
    return e.truth_value;
  case GuardExpr::Kind::delta_is:
    return ctx.g->delta.at(token) == e.delta_value;
  case GuardExpr::Kind::coord_cmp: {
    const grid::IndexValue v = grid::project(*ctx.g, token, e.axis);
    if (std::holds_alternative<long long>(v)) {
      const long long lhs = std::get<long long>(v);
      const long long rhs = std::get<long long>(e.cmp_value);
      switch (e.op) {
      case CmpOp::lt:
        return lhs < rhs;
      case CmpOp::le:
        return lhs <= rhs;
      case CmpOp::eq:
        return lhs == rhs;
      case CmpOp::ne:
        return lhs != rhs;
      case CmpOp::ge:
        return lhs >= rhs;
      case CmpOp::gt:
        return lhs > rhs;
      }
      return false;
    }
    const bool equal = grid::value_to_string(v) ==
                       grid::value_to_string(e.cmp_value);
    return (e.op == CmpOp::eq) ? equal : !equal;
  }
  case GuardExpr::Kind::reachable_within:
    return grid::evaluate_at_time(*ctx.g, *ctx.dep, *ctx.time, e.horizon, token)
        .nonempty;
  case GuardExpr::Kind::conj:
    for (const auto &c : e.children)
      if (!eval_expr(*c, ctx, token))
        return false;
    return true;
  case GuardExpr::Kind::disj:
    for (const auto &c : e.children)
      if (eval_expr(*c, ctx, token))
        return true;
    return false;
  case GuardExpr::Kind::neg:
    return !eval_expr(*e.children[0], ctx, token);
  }
  return false;
}

} // namespace

Report validate_criterion(const ExternalCriterion &j, const GuardContext &ctx) {
  if (!ctx.g)
    fail(ErrorCode::malformed_input, "criterion " + j.name + ": no grid in context");
  Report report;
  if (!j.guard && !j.table)
    report.add("criterion-empty",
               "criterion needs a guard expression or an extensional table",
               "criterion " + j.name);
  if (j.guard && j.table)
    report.add("criterion-ambiguous",
               "criterion has both a guard expression and a table",
               "criterion " + j.name);
  if (j.guard)
    validate_expr(*j.guard, ctx, report);
  if (j.table)
    for (const auto &[t, _] : *j.table)
      if (!ctx.g->has_token(t))
        report.add("criterion-token", "table references unknown token " + t,
                   "criterion " + j.name);
  if (j.default_carrier.empty())
    report.add("criterion-carrier", "default carrier must be nonempty",
               "criterion " + j.name);
  return report;
}

std::vector<std::string> guard_eval(const ExternalCriterion &j,
                                    const GuardContext &ctx,
                                    const std::string &token) {
  Report v = validate_criterion(j, ctx);
  if (!v.pass())
    fail(ErrorCode::malformed_input, "criterion " + j.name +
                                         " is ill-typed: " +
                                         v.findings.front().message);
  if (!ctx.g->has_token(token))
    fail(ErrorCode::not_found, "unknown token " + token);

  bool holds = false;
  if (j.table) {
    auto it = j.table->find(token);
    holds = (it != j.table->end()) && it->second;
  } else {
    holds = eval_expr(*j.guard, ctx, token);
  }
  if (!holds)
    return {};
  auto it = j.carrier.find(token);
  return (it != j.carrier.end()) ? it->second : j.default_carrier;
}

// --- κ^δ and the quasi-adjunction ------------------------------------------------

namespace {

cat::FinCategory make_c1() {
  cat::Preorder p;
  p.elements = {"Empty", "NonEmpty"};
  p.leq = {{"Empty", "Empty"}, {"Empty", "NonEmpty"}, {"NonEmpty", "NonEmpty"}};
  return cat::thin_from_preorder(p, "C1");
}

} // namespace

KappaResult kappa_transform(const ExternalCriterion &j, const GuardContext &ctx) {
  KappaResult out;
  const grid::Grid &g = *ctx.g;
  const cat::FinCategory c1 = make_c1();

  // pointwise objects of the two composites
  std::map<std::string, std::string> left, right; // token -> C1 object
  for (const auto &x : g.tokens) {
    left[x] = guard_eval(j, ctx, x).empty() ? "Empty" : "NonEmpty";
    right[x] = g.delta.at(x) ? "NonEmpty" : "Empty"; // Tr(Σ_def x)
  }

  // κ_x exists iff left(x) ≤ right(x); J0 violation is exactly the failure
  for (const auto &x : g.tokens) {
    if (left[x] == "NonEmpty" && right[x] == "Empty") {
      out.exists = false;
      out.witness = x;
      return out;
    }
    out.components[x] = "le:" + left[x] + ":" + right[x];
  }
  out.exists = true;

  // Σ_emp∘J is a functor on the thin order iff it is monotone along δ
  out.composite_functorial = true;
  for (const auto &x : g.tokens)
    for (const auto &y : g.tokens) {
      const bool arrow = !g.delta.at(x) || g.delta.at(y); // δ(x) ≤ δ(y)
      if (!arrow)
        continue;
      const bool image_arrow = !(left[x] == "NonEmpty" && left[y] == "Empty");
      if (!image_arrow) {
        out.composite_functorial = false;
        out.naturality.add("kappa-composite",
                           "Σ_emp∘J does not preserve the arrow " + x + " → " +
                               y + " (J1 absent); square skipped",
                           "kappa", Severity::info);
        continue;
      }
      // square in C1: κ_y ∘ (Σ_emp∘J)(x→y) = (Tr∘Σ_def)(x→y) ∘ κ_x
      const std::string f_img = "le:" + left[x] + ":" + left[y];
      const std::string g_img = "le:" + right[x] + ":" + right[y];
      const cat::Morphism *lhs = c1.compose(out.components[y], f_img);
      const cat::Morphism *rhs = c1.compose(g_img, out.components[x]);
      if (!lhs || !rhs || lhs->id != rhs->id)
        out.naturality.add("kappa-naturality",
                           "naturality square fails at " + x + " → " + y,
                           "kappa");
    }
  return out;
}

QuasiReport check_quasi_adjunction(const ExternalCriterion &j,
                                   const GuardContext &ctx) {
  QuasiReport out;
  const grid::Grid &g = *ctx.g;

  KappaResult kappa = kappa_transform(j, ctx);
  if (!kappa.exists) {
    out.mode = QuasiMode::fails;
    out.witness = kappa.witness;
    out.findings.add("j0-violation",
                     "δ(" + kappa.witness + ") = ⊥ but J(" + kappa.witness +
                         ") ≠ ∅: κ^δ does not exist",
                     "token " + kappa.witness);
    return out;
  }

  bool j1 = true;
  std::string j1_witness;
  for (const auto &x : g.tokens)
    if (g.delta.at(x) && guard_eval(j, ctx, x).empty()) {
      j1 = false;
      if (j1_witness.empty())
        j1_witness = x;
    }

  // hom tables over the two thin two-point categories; Tr is the evident
  // isomorphism, so the right side anchors at Tr⁻¹(b)
  auto thin_hom = [](const std::string &a, const std::string &b) {
    return (a == "Empty" || b == "NonEmpty") ? 1 : 0; // a ≤ b in C1 labels
  };
  for (const auto &x : g.tokens) {
    const std::string jx = guard_eval(j, ctx, x).empty() ? "Empty" : "NonEmpty";
    const std::string dx = g.delta.at(x) ? "NonEmpty" : "Empty";
    for (const std::string b : {"Empty", "NonEmpty"}) {
      HomEntry entry{x, b, thin_hom(jx, b), thin_hom(dx, b)};
      out.table.push_back(entry);
      if (j1 && entry.left != entry.right)
        out.findings.add("hom-mismatch",
                         "hom counts differ at (" + x + ", " + b + "): " +
                             std::to_string(entry.left) + " vs " +
                             std::to_string(entry.right),
                         "token " + x);
      if (!j1 && entry.right > entry.left)
        out.findings.add("implication-broken",
                         "right hom nonempty but left empty at (" + x + ", " +
                             b + ")",
                         "token " + x);
    }
  }

  out.mode = j1 ? QuasiMode::isomorphism : QuasiMode::implication;
  if (!j1)
    out.findings.add("j1-absent",
                     "δ(" + j1_witness + ") = ⊤ but J(" + j1_witness +
                         ") = ∅: correspondence is an implication, not an isomorphism",
                     "token " + j1_witness, Severity::info);
  if (!out.findings.pass())
    out.mode = QuasiMode::fails; // internal consistency breach
  return out;
}

// --- presets -----------------------------------------------------------------------

ExternalCriterion preset_guard(PresetGuard which, const PresetParams &params) {
  ExternalCriterion j;
  switch (which) {
  case PresetGuard::observation: {
    j.name = "observation";
    std::map<std::string, bool> table;
    for (const auto &t : params.tokens)
      table[t] = true;
    j.table = std::move(table);
    break;
  }
  case PresetGuard::reachability: {
    j.name = "reachability";
    auto e = std::make_shared<GuardExpr>();
    e->kind = GuardExpr::Kind::reachable_within;
    e->horizon = params.horizon;
    j.guard = e;
    break;
  }
  case PresetGuard::authorization: {
    j.name = "authorization";
    std::map<std::string, bool> table;
    for (const auto &t : params.tokens)
      table[t] = true;
    j.table = std::move(table);
    break;
  }
  }
  return j;
}

ExternalCriterion preset_guard(const std::string &name,
                               const PresetParams &params) {
  if (name == "observation")
    return preset_guard(PresetGuard::observation, params);
  if (name == "reachability")
    return preset_guard(PresetGuard::reachability, params);
  if (name == "authorization")
    return preset_guard(PresetGuard::authorization, params);
  fail(ErrorCode::not_found, "unknown guard preset " + name);
}

} // namespace hsg::jguard

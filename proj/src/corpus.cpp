#include <functional>
#include <stdexcept>

#include "gel/calculus.hpp"

// Concrete Hilbert derivations, built programmatically. The builder offers
// the usual classical lemmas over the => / ~ fragment (where /\, <-> are
// the defined connectives) plus a deduction-theorem transform, so the
// bundled derivations can be written the way they are usually presented:
// axiom instances, detachments, and discharged hypotheses. No search is
// involved; every helper appends a fixed pattern of lines.

namespace gel {

namespace {

using F = FormulaPtr;

F impl(F a, F b) { return Formula::impl(std::move(a), std::move(b)); }
F neg(F a) { return Formula::neg(std::move(a)); }

// parts of a => formula, i.e. ~A \/ B
F ant(const F& f) { return f->lhs->lhs; }
F con(const F& f) { return f->rhs; }

// parts of a < formula, i.e. B -> (A \/ ~A)
F prec_low(const F& f) { return f->rhs->lhs; }
F prec_high(const F& f) { return f->lhs; }

class ProofBuilder {
 public:
  ProofBuilder(const Calculus& calc, std::vector<F> premises)
      : calc_(calc), premises_(std::move(premises)) {}

  const F& at(int line) const { return proof_.lines[line - 1].formula; }
  Proof take() { return std::move(proof_); }

  int premise(int k) {
    Justification j;
    j.kind = Justification::Kind::Premise;
    j.i = k;
    return push(premises_.at(k - 1), j);
  }

  int axiom(const std::string& name, const Binding& b) {
    const Schema* s = find_schema(calc_, name);
    if (!s) throw std::logic_error("corpus: no axiom " + name + " in " + calc_.name);
    Justification j;
    j.kind = Justification::Kind::Axiom;
    j.axiom = name;
    j.binding = b;
    return push(substitute(s->pattern, b), j);
  }

  int mp(int minor, int major) {
    const F& maj = at(major);
    if (maj->kind != Conn::Or || maj->lhs->kind != Conn::Neg ||
        !equal(maj->lhs->lhs, at(minor)))
      throw std::logic_error("corpus: malformed detachment");
    Justification j;
    j.kind = Justification::Kind::MP;
    j.i = minor;
    j.j = major;
    return push(maj->rhs, j);
  }

  // --- classical toolkit -------------------------------------------------

  // A => A
  int id(const F& a) {
    int l1 = axiom("A1", {{"A", a}, {"B", impl(a, a)}});
    int l2 = axiom("A2", {{"A", a}, {"B", impl(a, a)}, {"C", a}});
    int l3 = mp(l1, l2);
    int l4 = axiom("A1", {{"A", a}, {"B", a}});
    return mp(l4, l3);
  }

  // from A=>B and B=>C: A=>C
  int syl(int iab, int ibc) {
    F a = ant(at(iab)), b = con(at(iab)), c = con(at(ibc));
    int l1 = axiom("A1", {{"A", at(ibc)}, {"B", a}});
    int l2 = mp(ibc, l1);  // A => (B=>C)
    int l3 = axiom("A2", {{"A", a}, {"B", b}, {"C", c}});
    int l4 = mp(l2, l3);  // (A=>B) => (A=>C)
    return mp(iab, l4);
  }

  // from A=>(B=>C): B=>(A=>C)
  int swap(int i) {
    F a = ant(at(i)), b = ant(con(at(i))), c = con(con(at(i)));
    int l1 = axiom("A2", {{"A", a}, {"B", b}, {"C", c}});
    int l2 = mp(i, l1);  // (A=>B) => (A=>C)
    int l3 = axiom("A1", {{"A", b}, {"B", a}});  // B => (A=>B)
    return syl(l3, l2);
  }

  // ~A => (A => C)
  int efq(const F& a, const F& c) {
    int l1 = axiom("A1", {{"A", neg(a)}, {"B", neg(c)}});
    int l2 = axiom("A3", {{"A", c}, {"B", a}});
    return syl(l1, l2);
  }

  // (~A => A) => A
  int clavius(const F& a) {
    F x = impl(neg(a), a);
    int l1 = efq(a, neg(x));
    int l2 = axiom("A2", {{"A", neg(a)}, {"B", a}, {"C", neg(x)}});
    int l3 = mp(l1, l2);  // (~A=>A) => (~A=>~X)
    int l4 = axiom("A3", {{"A", a}, {"B", x}});
    int l5 = syl(l3, l4);  // X => (X => A)
    int l6 = axiom("A2", {{"A", x}, {"B", x}, {"C", a}});
    int l7 = mp(l5, l6);  // (X=>X) => (X=>A)
    int l8 = id(x);
    return mp(l8, l7);
  }

  // ~~A => A
  int dne(const F& a) { return syl(efq(neg(a), a), clavius(a)); }

  // A => ~~A
  int dni(const F& a) {
    int l1 = dne(neg(a));
    int l2 = axiom("A3", {{"A", neg(neg(a))}, {"B", a}});
    return mp(l1, l2);
  }

  // from A=>B: (B=>C) => (A=>C)
  int suffix(int iab, const F& c) {
    F a = ant(at(iab)), b = con(at(iab));
    int l1 = axiom("A1", {{"A", impl(b, c)}, {"B", a}});
    int l2 = axiom("A2", {{"A", a}, {"B", b}, {"C", c}});
    int l3 = syl(l1, l2);              // (B=>C) => ((A=>B)=>(A=>C))
    int l4 = swap(l3);                 // (A=>B) => ((B=>C)=>(A=>C))
    return mp(iab, l4);
  }

  // (A => ~B) => (B => ~A)
  int cp1(const F& a, const F& b) {
    int l1 = axiom("A3", {{"A", neg(a)}, {"B", b}});  // (~~A=>~B) => (B=>~A)
    int l2 = suffix(dne(a), neg(b));                  // (A=>~B) => (~~A=>~B)
    return syl(l2, l1);
  }

  // from A /\ B (i.e. ~(A => ~B)): A
  int conj_elim_l(int i) {
    F a = ant(at(i)->lhs), c = con(at(i)->lhs);  // c is ~B
    F x = impl(a, c);
    int l1 = efq(a, c);
    int l2 = syl(l1, dni(x));  // ~A => ~~X
    int l3 = axiom("A3", {{"A", a}, {"B", neg(x)}});
    int l4 = mp(l2, l3);  // ~X => A
    return mp(i, l4);
  }

  // from A /\ B: B
  int conj_elim_r(int i) {
    F a = ant(at(i)->lhs), nb = con(at(i)->lhs);
    F b = nb->lhs, x = impl(a, nb);
    int l1 = axiom("A1", {{"A", nb}, {"B", a}});  // ~B => (A=>~B)
    int l2 = syl(l1, dni(x));                     // ~B => ~~X
    int l3 = axiom("A3", {{"A", b}, {"B", neg(x)}});
    int l4 = mp(l2, l3);  // ~X => B
    return mp(i, l4);
  }

  // from A and B: A /\ B
  int conj_intro(int ia, int ib) {
    F a = at(ia), b = at(ib);
    F x = impl(a, neg(b));
    int l1 = axiom("A1", {{"A", a}, {"B", x}});
    int l2 = mp(ia, l1);  // X => A
    int l3 = id(x);
    int l4 = axiom("A2", {{"A", x}, {"B", a}, {"C", neg(b)}});
    int l5 = mp(l3, l4);  // (X=>A) => (X=>~B)
    int l6 = mp(l2, l5);  // X => ~B
    int l7 = cp1(x, b);   // (X=>~B) => (B=>~X)
    int l8 = mp(l6, l7);
    return mp(ib, l8);  // ~X, i.e. A /\ B
  }

  int iff_forward(int i) { return conj_elim_l(i); }
  int iff_backward(int i) { return conj_elim_r(i); }
  int iff_intro(int iab, int iba) { return conj_intro(iab, iba); }

  // from X < Y and Y < Z: X < Z
  int prec_chain(int i, int j) {
    F x = prec_low(at(i)), y = prec_high(at(i)), z = prec_high(at(j));
    int both = conj_intro(i, j);
    int o2 = axiom("O2", {{"A", x}, {"B", y}, {"C", z}});
    return mp(both, o2);
  }

  // ~A < A
  int neg_prec(const F& a) {
    int o1 = axiom("O1", {{"A", a}});
    int o4 = axiom("O4", {{"A", a}, {"B", a}});
    int e = iff_forward(conj_elim_r(o4));  // (A<A) => (~A<A)
    return mp(o1, e);
  }

  // Deduction-theorem transform: run the body against the sole hypothesis
  // h and splice in a derivation of h => conclusion. The body must stay in
  // the MP fragment; necessitation under an open hypothesis is not
  // compiled.
  int deduce(const F& h, const std::function<int(ProofBuilder&)>& body) {
    ProofBuilder sub(calc_, {h});
    int sub_goal = body(sub);
    std::vector<int> lifted(sub.proof_.lines.size() + 1, 0);
    for (size_t k = 1; k <= sub.proof_.lines.size(); ++k) {
      const ProofLine& line = sub.proof_.lines[k - 1];
      switch (line.just.kind) {
        case Justification::Kind::Premise:
          lifted[k] = id(h);
          break;
        case Justification::Kind::Axiom: {
          int raw = axiom(line.just.axiom, *line.just.binding);
          int a1 = axiom("A1", {{"A", line.formula}, {"B", h}});
          lifted[k] = mp(raw, a1);
          break;
        }
        case Justification::Kind::MP: {
          const F& minor = sub.proof_.lines[line.just.i - 1].formula;
          int a2 = axiom("A2", {{"A", h}, {"B", minor}, {"C", line.formula}});
          int step = mp(lifted[line.just.j], a2);
          lifted[k] = mp(lifted[line.just.i], step);
          break;
        }
        default:
          throw std::logic_error("corpus: necessitation under an open hypothesis");
      }
    }
    return lifted[sub_goal];
  }

 private:
  int push(F f, Justification j) {
    proof_.lines.push_back(ProofLine{std::move(f), std::move(j)});
    return static_cast<int>(proof_.lines.size());
  }

  const Calculus& calc_;
  std::vector<F> premises_;
  Proof proof_;
};

// --- the bundled items ------------------------------------------------------

// Detachment for the intensional arrow: p, p -> q |- q, through A4 and T.
CorpusItem arrow_modus_ponens() {
  const Calculus& calc = *calculus_by_name("PAI0");
  F p = parse("p"), q = parse("q");
  ProofBuilder pb(calc, {p, parse("p -> q")});
  int l1 = pb.premise(1);
  int l2 = pb.premise(2);
  int a4 = pb.axiom("A4", {{"A", p}, {"B", q}});
  int rhs = pb.mp(l2, pb.iff_forward(a4));       // [](p=>q) /\ (q<p)
  int boxed = pb.conj_elim_l(rhs);               // [](p=>q)
  int t = pb.axiom("T", {{"A", impl(p, q)}});
  int material = pb.mp(boxed, t);                // p=>q
  pb.mp(l1, material);
  return {"arrow-modus-ponens", "PAI0", {p, parse("p -> q")}, q, pb.take()};
}

// q < (tau_q -> q), the right-hand box-transparency carrier.
int derive_below_tau_arrow(ProofBuilder& pb, const F& q) {
  F tau = Formula::taut_of(q);
  int c1 = pb.axiom("C1", {{"A", tau}, {"B", q}});
  int below_join = pb.conj_elim_r(c1);  // q < (tau \/ q)
  int a5 = pb.axiom("A5", {{"A", tau}, {"B", q}});
  int join_below = pb.conj_elim_r(a5);  // (tau \/ q) < (tau -> q)
  return pb.prec_chain(below_join, join_below);
}

// (tau_q -> q) < q
int derive_tau_arrow_below(ProofBuilder& pb, const F& q) {
  F tau = Formula::taut_of(q);
  int a5 = pb.axiom("A5", {{"A", tau}, {"B", q}});
  int arrow_below_join = pb.conj_elim_l(a5);  // (tau -> q) < (tau \/ q)
  int o1 = pb.axiom("O1", {{"A", q}});
  int tau_below = pb.mp(pb.conj_intro(o1, pb.neg_prec(q)),
                        pb.axiom("C2", {{"A", q}, {"B", neg(q)}, {"C", q}}));  // tau < q
  int join_below = pb.mp(pb.conj_intro(tau_below, pb.axiom("O1", {{"A", q}})),
                         pb.axiom("C2", {{"A", tau}, {"B", q}, {"C", q}}));  // (tau \/ q) < q
  return pb.prec_chain(arrow_below_join, join_below);
}

// Box transparency regained from A5: (p < q) <-> (p < (tau_q -> q)).
CorpusItem transparency_from_a5() {
  const Calculus& calc = *calculus_by_name("lPAI");
  F p = parse("p"), q = parse("q");
  F tau_arrow = Formula::arrow(Formula::taut_of(q), q);
  ProofBuilder pb(calc, {});
  int fwd = pb.deduce(Formula::prec(p, q), [&](ProofBuilder& b) {
    int h = b.premise(1);
    return b.prec_chain(h, derive_below_tau_arrow(b, q));
  });
  int bwd = pb.deduce(Formula::prec(p, tau_arrow), [&](ProofBuilder& b) {
    int h = b.premise(1);
    return b.prec_chain(h, derive_tau_arrow_below(b, q));
  });
  pb.iff_intro(fwd, bwd);
  FormulaPtr goal = Formula::iff(Formula::prec(p, q), Formula::prec(p, tau_arrow));
  return {"transparency-from-a5", "lPAI", {}, goal, pb.take()};
}

// (p /\ q) < (p \/ q)
int derive_conj_below_disj(ProofBuilder& pb, const F& p, const F& q) {
  F pq = Formula::disj(p, q);
  int p_below = pb.conj_elim_l(pb.axiom("C1", {{"A", p}, {"B", q}}));
  int np_below = pb.prec_chain(pb.neg_prec(p), p_below);  // ~p < (p \/ q)
  int q_below = pb.conj_elim_r(pb.axiom("C1", {{"A", p}, {"B", q}}));
  int nq_below = pb.prec_chain(pb.neg_prec(q), q_below);
  int negs_below = pb.mp(pb.conj_intro(np_below, nq_below),
                         pb.axiom("C2", {{"A", neg(p)}, {"B", neg(q)}, {"C", pq}}));
  F negs = Formula::disj(neg(p), neg(q));
  return pb.prec_chain(pb.neg_prec(negs), negs_below);
}

// Conjunction introduction on the left of containment:
// ((p < r) /\ (q < r)) => ((p /\ q) < r)
CorpusItem conjunction_containment() {
  const Calculus& calc = *calculus_by_name("lPAI");
  F p = parse("p"), q = parse("q"), r = parse("r");
  F hyp = Formula::conj(Formula::prec(p, r), Formula::prec(q, r));
  ProofBuilder pb(calc, {});
  pb.deduce(hyp, [&](ProofBuilder& b) {
    int h = b.premise(1);
    int disj_below = b.mp(h, b.axiom("C2", {{"A", p}, {"B", q}, {"C", r}}));  // (p\/q) < r
    int conj_below = derive_conj_below_disj(b, p, q);
    return b.prec_chain(conj_below, disj_below);
  });
  FormulaPtr goal = Formula::impl(hyp, Formula::prec(Formula::conj(p, q), r));
  return {"conjunction-containment", "lPAI", {}, goal, pb.take()};
}

// Variable-containment instance: p < (p \/ q).
CorpusItem containment_in_disjunction() {
  const Calculus& calc = *calculus_by_name("lPAI");
  F p = parse("p"), q = parse("q");
  ProofBuilder pb(calc, {});
  pb.conj_elim_l(pb.axiom("C1", {{"A", p}, {"B", q}}));
  return {"containment-in-disjunction", "lPAI", {}, Formula::prec(p, Formula::disj(p, q)),
          pb.take()};
}

// Variable-containment instance across ~, [] and ->:
// (~p \/ []q) < (p -> q).
CorpusItem containment_in_arrow() {
  const Calculus& calc = *calculus_by_name("lPAI");
  F p = parse("p"), q = parse("q");
  F pq = Formula::disj(p, q);
  ProofBuilder pb(calc, {});
  int np_below = pb.prec_chain(pb.neg_prec(p),
                               pb.conj_elim_l(pb.axiom("C1", {{"A", p}, {"B", q}})));
  int q_below = pb.conj_elim_r(pb.axiom("C1", {{"A", p}, {"B", q}}));
  int o5 = pb.axiom("O5", {{"A", q}, {"B", pq}});
  int boxq_below = pb.mp(q_below, pb.iff_forward(pb.conj_elim_r(o5)));  // []q < (p \/ q)
  int lhs_below = pb.mp(pb.conj_intro(np_below, boxq_below),
                        pb.axiom("C2", {{"A", neg(p)}, {"B", Formula::box(q)}, {"C", pq}}));
  int join_below = pb.conj_elim_r(pb.axiom("A5", {{"A", p}, {"B", q}}));  // (p\/q) < (p->q)
  pb.prec_chain(lhs_below, join_below);
  FormulaPtr goal =
      Formula::prec(Formula::disj(neg(p), Formula::box(q)), Formula::arrow(p, q));
  return {"containment-in-arrow", "lPAI", {}, goal, pb.take()};
}

}  // namespace

std::vector<CorpusItem> derivation_corpus() {
  return {arrow_modus_ponens(), transparency_from_a5(), conjunction_containment(),
          containment_in_disjunction(), containment_in_arrow()};
}

}  // namespace gel

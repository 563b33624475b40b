#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racg/center.hpp"
#include "racg/coxeter.hpp"
#include "racg/hecke.hpp"
#include "racg/laurent.hpp"

namespace racg {

/// W = Z2^{k_1} * ... * Z2^{k_n}: the commutation graph is a disjoint union of cliques.
struct FreeFactorSpec {
  std::vector<unsigned> ranks;
};

/// Throws InputError unless n >= 2, every rank >= 1 and the total rank is at most 64.
void validate(const FreeFactorSpec& spec);

/// Generators a1..ak for the first clique, b1.. for the second, and so on.
CoxeterSystem free_product_system(const FreeFactorSpec& spec);

struct CliqueStructure {
  FreeFactorSpec spec;
  std::vector<GeneratorSet> blocks;  // the cliques, ordered by smallest generator
};

/// Present when the commutation graph of sys is a disjoint union of at least two cliques.
std::optional<CliqueStructure> clique_structure(const CoxeterSystem& sys);

/// Atoms labelled by tuples of subsets, one subset (bit mask) of each clique.
struct AtomicMeasure {
  struct Atom {
    std::vector<std::uint64_t> subsets;
    Rational mass;
  };
  std::vector<Atom> atoms;

  Rational total() const;
};

/// mu_k(w) = q^{|w|}/(q+1)^k on Z2^k, atoms ordered by bit mask.
AtomicMeasure mu_k(unsigned k, const Rational& q);

/// The idempotents of N_q(Z2) over the formal variable u, sharing the
/// denominator u^2 + 1: e+ = (u T_s + 1)/(u^2 + 1), e- = (u^2 - u T_s)/(u^2 + 1).
struct Z2Idempotents {
  ExactHecke plus;   // numerator of e+
  ExactHecke minus;  // numerator of e-
  LaurentPoly denominator;
};

Z2Idempotents hvn_z2_idempotents(const CoxeterSystem& sys, GeneratorId s);

struct IdempotentCheck {
  bool sum_is_unit = false;
  bool plus_idempotent = false;
  bool minus_idempotent = false;
  bool self_adjoint = false;
  bool orthogonal = false;
  bool plus_state = false;   // phi(e+) = 1/(q+1)
  bool minus_state = false;  // phi(e-) = q/(q+1)
  bool all() const {
    return sum_is_unit && plus_idempotent && minus_idempotent && self_adjoint && orthogonal && plus_state &&
           minus_state;
  }
};

/// Checks the identities after clearing the common denominator.
IdempotentCheck check_idempotents(const CoxeterSystem& sys, const Z2Idempotents& e);

struct DecompositionReport {
  FreeFactorSpec spec;           // ranks in fold order (descending)
  std::vector<std::size_t> order;  // position in the input spec of each folded factor
  Rational q;
  bool diffuse = false;          // presence of the L(F_s) summand
  AtomicMeasure atoms;           // subsets indexed by input position
};

/// Iterated pairwise rule: atoms (x, y) with mu_X(x) + mu_Y(y) > 1 survive with
/// weight mu_X(x) + mu_Y(y) - 1. Throws PreconditionError when every rank is 1.
DecompositionReport dykema_decompose(const FreeFactorSpec& spec, const Rational& q);

/// Sum_i (q/(q+1))^{k_i} > n - 1, evaluated at max(q, 1/q).
bool closed_form_condition(const FreeFactorSpec& spec, const Rational& q);

struct CrossValidation {
  Rational q;
  bool closed_form = false;
  bool outside_interval = false;     // max(q, 1/q) > 1/rho, exact
  std::optional<std::size_t> atom_count;  // empty when the fold does not apply
  Classification classification = Classification::not_applicable;
  double rho = 0.0;
  bool agree = false;
};

CrossValidation cross_validate_with_rho(const FreeFactorSpec& spec, const Rational& q);

struct FreenessReport {
  std::size_t sequences = 0;
  std::vector<std::vector<Element>> witnesses;
  bool pass() const { return witnesses.empty(); }
};

/// phi(T_{w_1} ... T_{w_k}) = 0 for alternating nontrivial w_i from the blocks,
/// total length <= max_len, in exact arithmetic. Every generator must be in
/// exactly one block and generators of different blocks must not commute.
FreenessReport freeness_test(const CoxeterSystem& sys, const std::vector<GeneratorSet>& blocks, std::size_t max_len);

}  // namespace racg

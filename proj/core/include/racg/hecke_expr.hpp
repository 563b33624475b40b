#pragma once

#include <string>
#include <string_view>

#include "racg/coxeter.hpp"
#include "racg/hecke.hpp"

namespace racg {

/// Parses expressions such as "(T(st) + 2*T(s)) * star(T(ts)) - 1/2*u^-1*T(1)".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := number | 'u' | 'p' | 'T(' word ')' | 'star(' expr ')' | 'j(' expr ')' | '(' expr ')'
///
/// Numbers are exact rationals ("3", "3/4", "0.25"). Negative powers are only
/// allowed for scalar monomials such as u^-1. Throws InputError with the
/// offending column.
ExactHecke parse_hecke(const CoxeterSystem& sys, std::string_view text);

/// Canonical text: terms in ShortLex order of their elements, e.g.
/// "T(1) + (u - u^-1)*T(s)". The output parses back to the same element
/// (for elements of the algebra with parameter q).
std::string format_hecke(const CoxeterSystem& sys, const ExactHecke& a);
std::string format_hecke(const CoxeterSystem& sys, const NumericHecke& a);

}  // namespace racg

#pragma once

#include <string>

#include "gconv/method.hpp"
#include "gconv/product.hpp"
#include "gconv/rset.hpp"
#include "gconv/seq.hpp"

namespace gconv {

/// Parse failure with the offending position and what was expected there.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

/// Set expressions: intervals [a,b] (a,b) [a,b) (a,b], singletons {a},
/// R, empty, infix u (union), n (intersection), \ (difference), prefix
/// compl(...), neg(...), + (Minkowski sum; bare rationals act as
/// singletons, so "1/2 + (0,1)" translates). Rationals are p/q; infinite
/// endpoints are inf and -inf. Union binds loosest, then n and \, then +.
RSet parse_set(const std::string& text);

/// Sequence literals: const(tail=3), const(prefix=[1,2]; tail=3),
/// per(prefix=[]; cycle=[0,1]), spike(base=0; spike=1; where=squares),
/// tab(values=[5,7]; beyond=spike(...)). Families: squares, pow2,
/// ap(first,step), finite(n1,n2,...).
SeqSpec parse_seq(const std::string& text);

IndexFamily parse_family(const std::string& text);

/// Method selectors: lim, cesaro, stat, matrix:<file>, prod(<method>).
MethodSpec parse_method(const std::string& text, const NumericParams& params = {});

/// Box literals: box[d=3]{(0,1); (0,1); (0,1); tail=R} with tail either a
/// set expression or shifted(r=1/4); or family shifted(r=1/4) with the
/// depth supplied by the caller.
DepthBox parse_box(const std::string& text, std::int64_t default_depth = 3);

Rat parse_rat(const std::string& text);

}  // namespace gconv

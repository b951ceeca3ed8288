#pragma once

#include <Eigen/Core>

#include "simplexgauss/numberfield.hpp"
#include "simplexgauss/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<simplexgauss::Integer> : GenericNumTraits<simplexgauss::Integer> {
    using Real = simplexgauss::Integer;
    using NonInteger = simplexgauss::Rational;
    using Nested = simplexgauss::Integer;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<simplexgauss::Rational> : GenericNumTraits<simplexgauss::Rational> {
    using Real = simplexgauss::Rational;
    using NonInteger = simplexgauss::Rational;
    using Nested = simplexgauss::Rational;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<simplexgauss::NFElement> : GenericNumTraits<simplexgauss::NFElement> {
    using Real = simplexgauss::NFElement;
    using NonInteger = simplexgauss::NFElement;
    using Nested = simplexgauss::NFElement;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 60,
        MulCost = 200,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace simplexgauss {

// Dense containers used throughout: column vectors of exact scalars and
// integer matrices whose columns are simplex vertices / map actions.
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Vec<Integer>;
using QVec = Vec<Rational>;
using NVec = Vec<NFElement>;

}  // namespace simplexgauss

#pragma once

#include "fgroup/core.hpp"

namespace fgroup {

/// A Deligne–Mumford curve: its rigidification and the order of its generic inertia.
struct DMCurveData {
    Signature rigidified;
    BigInt generic_inertia_order {1};
};

inline DMCurveData make_dm_curve(Signature rigidified, BigInt generic_inertia_order)
{
    if (generic_inertia_order < 1) {
        fail(ErrorCode::InvalidInertia, "generic inertia order must be at least 1");
    }
    return {std::move(rigidified), std::move(generic_inertia_order)};
}

/// χ(X) = χ(X_rig) / |I_η|.
inline Rational dm_euler_characteristic(const DMCurveData& dm)
{
    if (dm.generic_inertia_order < 1) {
        fail(ErrorCode::InvalidInertia, "generic inertia order must be at least 1");
    }
    return euler_characteristic(dm.rigidified) / Rational(dm.generic_inertia_order);
}

} // namespace fgroup

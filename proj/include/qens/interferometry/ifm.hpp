#ifndef QENS_INTERFEROMETRY_IFM_HPP
#define QENS_INTERFEROMETRY_IFM_HPP

#include "qens/error.hpp"

namespace qens {

struct IfmResult {
    double p_detect = 0.0;   // reflected, returned, transmitted to the IFM detector
    double p_trigger = 0.0;  // transmitted into the bomb arm
    double merit = 0.0;      // p_detect / (p_detect + p_trigger)
    bool degenerate = false; // R = 0 or 1: merit is the limiting value
};

/// Classical event-tree model of the bomb-in Michelson configuration with
/// beam-splitter reflectivity R: merit = R / (1 + R).
inline IfmResult ifm_figure_of_merit(double R) {
    detail::require(R >= 0.0 && R <= 1.0, "ifm_figure_of_merit: reflectivity must lie in [0, 1]");
    IfmResult r;
    r.p_trigger = 1.0 - R;
    r.p_detect = R * (1.0 - R);
    if (R == 0.0 || R == 1.0) {
        r.degenerate = true;
        r.merit = R == 0.0 ? 0.0 : 0.5;
        return r;
    }
    r.merit = R / (1.0 + R);
    return r;
}

}  // namespace qens

#endif

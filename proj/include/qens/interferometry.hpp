#ifndef QENS_INTERFEROMETRY_HPP
#define QENS_INTERFEROMETRY_HPP

#include "qens/interferometry/eraser.hpp"
#include "qens/interferometry/ifm.hpp"
#include "qens/interferometry/magnetic.hpp"
#include "qens/interferometry/zeno.hpp"

#endif

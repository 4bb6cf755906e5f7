#ifndef QENS_QENS_HPP
#define QENS_QENS_HPP

#include "qens/constants.hpp"
#include "qens/diffraction.hpp"
#include "qens/ensemble.hpp"
#include "qens/interferometry.hpp"
#include "qens/local_nlse.hpp"
#include "qens/square_well.hpp"
#include "qens/wavepacket.hpp"

#endif

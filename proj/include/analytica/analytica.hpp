#ifndef ANALYTICA_ANALYTICA_HPP
#define ANALYTICA_ANALYTICA_HPP

#include "analytica/composition.hpp"
#include "analytica/convergence.hpp"
#include "analytica/errors.hpp"
#include "analytica/gallery.hpp"
#include "analytica/multilinear.hpp"
#include "analytica/scalar.hpp"
#include "analytica/seq_spaces.hpp"
#include "analytica/series.hpp"
#include "analytica/weights.hpp"

#endif  // ANALYTICA_ANALYTICA_HPP

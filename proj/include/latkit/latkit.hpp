#ifndef LATKIT_LATKIT_HPP
#define LATKIT_LATKIT_HPP

#include "latkit/completion.hpp"
#include "latkit/errors.hpp"
#include "latkit/galois.hpp"
#include "latkit/io.hpp"
#include "latkit/lattice.hpp"
#include "latkit/propositions.hpp"
#include "latkit/quantale.hpp"
#include "latkit/report.hpp"
#include "latkit/sampling.hpp"

#endif  // LATKIT_LATKIT_HPP

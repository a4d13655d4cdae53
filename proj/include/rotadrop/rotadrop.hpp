#ifndef ROTADROP_ROTADROP_HPP
#define ROTADROP_ROTADROP_HPP

#include "rotadrop/params.hpp"
#include "rotadrop/core.hpp"
#include "rotadrop/ode.hpp"
#include "rotadrop/quantities.hpp"
#include "rotadrop/bounds.hpp"
#include "rotadrop/mesh.hpp"

#endif

#ifndef TORIC_CONTACT_TORIC_CONTACT_HPP
#define TORIC_CONTACT_TORIC_CONTACT_HPP

#include <toric_contact/arith.hpp>
#include <toric_contact/contact.hpp>
#include <toric_contact/lattice.hpp>
#include <toric_contact/polyhedron.hpp>
#include <toric_contact/polytope.hpp>
#include <toric_contact/rational_linalg.hpp>
#include <toric_contact/reduction.hpp>
#include <toric_contact/sphere_models.hpp>

#endif  // TORIC_CONTACT_TORIC_CONTACT_HPP

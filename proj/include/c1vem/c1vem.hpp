#pragma once

#include "geometry.hpp"
#include "quadrature.hpp"
#include "basis.hpp"
#include "mesh.hpp"
#include "mesh_gen.hpp"
#include "mesh_io.hpp"
#include "integrals.hpp"
#include "element.hpp"
#include "assembly.hpp"
#include "postprocess.hpp"
#include "solutions.hpp"
#include "study.hpp"

#pragma once

#include "doa/rational.hpp"
#include "doa/perm.hpp"
#include "doa/param_poly.hpp"
#include "doa/vect.hpp"
#include "doa/sympoly.hpp"
#include "doa/parallel.hpp"
#include "doa/cochain.hpp"
#include "doa/families.hpp"
#include "doa/groebner.hpp"
#include "doa/pbw.hpp"
#include "doa/rewrite.hpp"
#include "doa/json_io.hpp"

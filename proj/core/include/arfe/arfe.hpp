#pragma once

#include "arfe/error.hpp"
#include "arfe/gf2.hpp"
#include "arfe/io.hpp"
#include "arfe/mcg.hpp"
#include "arfe/oracle.hpp"
#include "arfe/orthogroup.hpp"
#include "arfe/quadform.hpp"

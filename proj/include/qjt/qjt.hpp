#pragma once

#include "qjt/divergence.hpp"
#include "qjt/entropy.hpp"
#include "qjt/error.hpp"
#include "qjt/graph.hpp"
#include "qjt/laplacian.hpp"
#include "qjt/probability.hpp"
#include "qjt/spectral.hpp"

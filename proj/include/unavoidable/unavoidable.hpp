#pragma once

#include "unavoidable/big_count.hpp"
#include "unavoidable/certificates.hpp"
#include "unavoidable/cleaning.hpp"
#include "unavoidable/constants.hpp"
#include "unavoidable/detectors.hpp"
#include "unavoidable/embedding.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/generation.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/io.hpp"
#include "unavoidable/trees.hpp"

#pragma once
// Umbrella header: the whole library.

#include "spectree/closure.hpp"
#include "spectree/conditions.hpp"
#include "spectree/connectivity.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/families.hpp"
#include "spectree/graph.hpp"
#include "spectree/graph6.hpp"
#include "spectree/isomorphism.hpp"
#include "spectree/spanning.hpp"
#include "spectree/spectral.hpp"
#include "spectree/verify.hpp"

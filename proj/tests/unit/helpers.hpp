#pragma once

#include "cutkit/descriptor.hpp"
#include "cutkit/error.hpp"

#include <gtest/gtest.h>

inline cutkit::PermutationGroup G(const char* desc) { return cutkit::build_group(desc); }

inline cutkit::PermutationGroup s3() { return G("perm(3;(0,1);(0,1,2))"); }

#define EXPECT_KIND(stmt, k)                                                                                          \
    do {                                                                                                               \
        try {                                                                                                          \
            stmt;                                                                                                      \
            ADD_FAILURE() << "no error thrown";                                                                        \
        } catch (const cutkit::Error& e) {                                                                             \
            EXPECT_EQ(e.kind(), cutkit::ErrorKind::k) << e.what();                                                     \
        }                                                                                                              \
    } while (0)

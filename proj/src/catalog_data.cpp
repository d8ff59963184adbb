#include "catalog_data.hpp"

namespace projembed::catalog_data {

const FixedEntry kFixed[] = {
    {"D8", 2, "Z/2",
     R"(pcgroup D8
gen b a a2
ord b=2 a=2 a2=2
pow a = a2
conj a^b = a*a2
end
)",
     R"(pcgroup D8_star
gen b a a2 t1
ord b=2 a=2 a2=2 t1=2
pow a = a2
pow a2 = t1
conj a^b = a*a2
conj a2^b = a2*t1
end
kernel t1
)"},
    {"Q8", 2, "trivial",
     R"(pcgroup Q8
gen b a a2
ord b=2 a=2 a2=2
pow b = a2
pow a = a2
conj a^b = a*a2
end
)",
     nullptr},
    {"G16_3", 2, "(Z/2)^2",
     R"(pcgroup G16_3
gen c a a2 b
ord c=2 a=2 a2=2 b=2
pow a = a2
conj a^c = a*b
end
)",
     R"(pcgroup G16_3_star
gen c a a2 b t1 t2
ord c=2 a=2 a2=2 b=2 t1=2 t2=2
pow a = a2
pow b = t1*t2
conj a^c = a*b
conj a2^c = a2*t1
conj b^c = b*t1*t2
conj b^a = b*t2
end
kernel t1 t2
)"},
    {"G16_4", 2, "Z/2",
     R"(pcgroup G16_4
gen b a a2 b2
ord b=2 a=2 a2=2 b2=2
pow b = b2
pow a = a2
conj a^b = a*a2
end
)",
     R"(pcgroup G16_4_star
gen b a a2 b2 t1
ord b=2 a=2 a2=2 b2=2 t1=2
pow b = b2
pow a = a2
pow a2 = t1
conj a^b = a*a2
conj a2^b = a2*t1
end
kernel t1
)"},
    {"M16", 2, "trivial",
     R"(pcgroup M16
gen b a a2 a4
ord b=2 a=2 a2=2 a4=2
pow a = a2
pow a2 = a4
conj a^b = a*a4
end
)",
     nullptr},
    {"D16", 2, "Z/2",
     R"(pcgroup D16
gen b a a2 a4
ord b=2 a=2 a2=2 a4=2
pow a = a2
pow a2 = a4
conj a^b = a*a2*a4
conj a2^b = a2*a4
end
)",
     R"(pcgroup D16_star
gen b a a2 a4 t1
ord b=2 a=2 a2=2 a4=2 t1=2
pow a = a2
pow a2 = a4*t1
pow a4 = t1
conj a^b = a*a2*a4
conj a2^b = a2*a4
conj a4^b = a4*t1
end
kernel t1
)"},
    {"SD16", 2, "trivial",
     R"(pcgroup SD16
gen b a a2 a4
ord b=2 a=2 a2=2 a4=2
pow a = a2
pow a2 = a4
conj a^b = a*a2
conj a2^b = a2*a4
end
)",
     nullptr},
    {"Q16", 2, "trivial",
     R"(pcgroup Q16
gen b a a2 a4
ord b=2 a=2 a2=2 a4=2
pow b = a4
pow a = a2
pow a2 = a4
conj a^b = a*a2*a4
conj a2^b = a2*a4
end
)",
     nullptr},
    {"D8xC2", 2, "(Z/2)^3",
     R"(pcgroup D8xC2
gen b a a2 c
ord b=2 a=2 a2=2 c=2
pow a = a2
conj a^b = a*a2
end
)",
     R"(pcgroup D8xC2_star
gen b a a2 c t1 t2 t3
ord b=2 a=2 a2=2 c=2 t1=2 t2=2 t3=2
pow a = a2
pow a2 = t1
conj a^b = a*a2
conj a2^b = a2*t1
conj c^b = c*t2
conj c^a = c*t3
end
kernel t1 t2 t3
)"},
    {"Q8xC2", 2, "(Z/2)^2",
     R"(pcgroup Q8xC2
gen b a a2 c
ord b=2 a=2 a2=2 c=2
pow b = a2
pow a = a2
conj a^b = a*a2
end
)",
     R"(pcgroup Q8xC2_star
gen b a a2 c t1 t2
ord b=2 a=2 a2=2 c=2 t1=2 t2=2
pow b = a2
pow a = a2
conj a^b = a*a2
conj c^b = c*t1
conj c^a = c*t2
end
kernel t1 t2
)"},
    {"Pauli", 2, "(Z/2)^2",
     R"(pcgroup Pauli
gen b a c a2
ord b=2 a=2 c=2 a2=2
pow a = a2
pow c = a2
conj a^b = a*a2
end
)",
     R"(pcgroup Pauli_star
gen b a c a2 t1 t2
ord b=2 a=2 c=2 a2=2 t1=2 t2=2
pow a = a2
pow c = a2
conj a^b = a*a2
conj c^b = c*t1
conj c^a = c*t2
end
kernel t1 t2
)"},
    {"ES32+", 2, "(Z/2)^5",
     R"(pcgroup ES32plus
gen a b c d z
ord a=2 b=2 c=2 d=2 z=2
comm [b,a] = z
comm [d,c] = z
end
)",
     R"(pcgroup ES32plus_star
gen a b c d z t1 t2 t3 t4 t5
ord a=2 b=2 c=2 d=2 z=2 t1=2 t2=2 t3=2 t4=2 t5=2
conj b^a = b*z*t5
conj c^a = c*t1
conj c^b = c*t2
conj d^a = d*t3
conj d^b = d*t4
conj d^c = d*z
end
kernel t1 t2 t3 t4 t5
)"},
    {"ES32-", 2, "(Z/2)^5",
     R"(pcgroup ES32minus
gen a b c d z
ord a=2 b=2 c=2 d=2 z=2
pow c = z
pow d = z
comm [b,a] = z
comm [d,c] = z
end
)",
     R"(pcgroup ES32minus_star
gen a b c d z t1 t2 t3 t4 t5
ord a=2 b=2 c=2 d=2 z=2 t1=2 t2=2 t3=2 t4=2 t5=2
pow c = z
pow d = z
conj b^a = b*z*t5
conj c^a = c*t1
conj c^b = c*t2
conj d^a = d*t3
conj d^b = d*t4
conj d^c = d*z
end
kernel t1 t2 t3 t4 t5
)"},
    {"Phi2(211)a", 3, "(Z/3)^2",
     R"(pcgroup Phi2_211_a
gen a a1 b g
ord a=3 a1=3 b=3 g=3
pow a = b
comm [a1,a] = b
end
)",
     R"(pcgroup Phi2_211_a_star
gen a a1 b g t1 t2
ord a=3 a1=3 b=3 g=3 t1=3 t2=3
pow a = b
conj a1^a = a1*b
conj g^a = g*t1
conj g^a1 = g*t2
end
kernel t1 t2
)"},
    {"Phi2(1^4)", 3, "(Z/3)^4",
     R"(pcgroup Phi2_1_4
gen a a1 a2 g
ord a=3 a1=3 a2=3 g=3
comm [a1,a] = a2
end
)",
     R"(pcgroup Phi2_1_4_star
gen a a1 a2 g t1 t2 t3 t4
ord a=3 a1=3 a2=3 g=3 t1=3 t2=3 t3=3 t4=3
conj a1^a = a1*a2
conj a2^a = a2*t1*t2
conj a2^a1 = a2*t2
conj g^a = g*t3
conj g^a1 = g*t4
end
kernel t1 t2 t3 t4
)"},
    {"Phi2(31)", 3, "trivial",
     R"(pcgroup Phi2_31
gen a a1 ap app
ord a=3 a1=3 ap=3 app=3
pow a = ap
pow ap = app
comm [a1,a] = app
end
)",
     nullptr},
    {"Phi2(22)", 3, "Z/3",
     R"(pcgroup Phi2_22
gen a a1 ap a1p
ord a=3 a1=3 ap=3 a1p=3
pow a = ap
pow a1 = a1p
comm [a1,a] = ap
end
)",
     R"(pcgroup Phi2_22_star
gen a a1 ap a1p t1
ord a=3 a1=3 ap=3 a1p=3 t1=3
pow a = ap
pow a1 = a1p
pow ap = t1^2
conj a1^a = a1*ap
conj ap^a1 = ap*t1
conj a1p^a = a1p*t1^2
end
kernel t1
)"},
    {"Phi2(211)b", 3, "(Z/3)^2",
     R"(pcgroup Phi2_211_b
gen a a1 g gp
ord a=3 a1=3 g=3 gp=3
pow g = gp
comm [a1,a] = gp
end
)",
     R"(pcgroup Phi2_211_b_star
gen a a1 g gp t1 t2
ord a=3 a1=3 g=3 gp=3 t1=3 t2=3
pow g = gp
conj a1^a = a1*gp
conj g^a = g*t1
conj g^a1 = g*t2
end
kernel t1 t2
)"},
    {"Phi2(211)c", 3, "(Z/3)^2",
     R"(pcgroup Phi2_211_c
gen a a1 a2 ap
ord a=3 a1=3 a2=3 ap=3
pow a = ap
comm [a1,a] = a2
end
)",
     R"(pcgroup Phi2_211_c_star
gen a a1 a2 ap t1 t2
ord a=3 a1=3 a2=3 ap=3 t1=3 t2=3
pow a = ap
conj a1^a = a1*a2
conj a2^a = a2*t1
conj a2^a1 = a2*t2
end
kernel t1 t2
)"},
    {"Phi3(211)a", 3, "Z/3",
     R"(pcgroup Phi3_211_a
gen a a1 a2 a3
ord a=3 a1=3 a2=3 a3=3
pow a = a3
pow a1 = a3^2
comm [a1,a] = a2
comm [a2,a] = a3
end
)",
     R"(pcgroup Phi3_211_a_star
gen a a1 a2 a3 t1
ord a=3 a1=3 a2=3 a3=3 t1=3
pow a = a3
pow a1 = a3^2
conj a1^a = a1*a2
conj a2^a = a2*a3
conj a2^a1 = a2*t1
end
kernel t1
)"},
    {"Phi3(211)b_1", 3, "Z/3",
     R"(pcgroup Phi3_211_b_1
gen a a1 a2 a3
ord a=3 a1=3 a2=3 a3=3
comm [a1,a] = a2
comm [a2,a] = a3
end
)",
     R"(pcgroup Phi3_211_b_1_star
gen a a1 a2 a3 t1
ord a=3 a1=3 a2=3 a3=3 t1=3
conj a1^a = a1*a2
conj a2^a = a2*a3
conj a2^a1 = a2*t1
end
kernel t1
)"},
    {"Phi3(211)b_2", 3, "Z/3",
     R"(pcgroup Phi3_211_b_2
gen a a1 a2 a3
ord a=3 a1=3 a2=3 a3=3
pow a1 = a3
comm [a1,a] = a2
comm [a2,a] = a3
end
)",
     R"(pcgroup Phi3_211_b_2_star
gen a a1 a2 a3 t1
ord a=3 a1=3 a2=3 a3=3 t1=3
pow a1 = a3
conj a1^a = a1*a2
conj a2^a = a2*a3
conj a2^a1 = a2*t1
end
kernel t1
)"},
    {"Phi3(1^4)", 3, "(Z/3)^2",
     R"(pcgroup Phi3_1_4
gen a a1 a2 a3
ord a=3 a1=3 a2=3 a3=3
pow a1 = a3^2
comm [a1,a] = a2
comm [a2,a] = a3
end
)",
     R"(pcgroup Phi3_1_4_star
gen a a1 a2 a3 t1 t2
ord a=3 a1=3 a2=3 a3=3 t1=3 t2=3
pow a1 = a3^2
pow a2 = t2^2
conj a1^a = a1*a2
conj a2^a = a2*a3
conj a2^a1 = a2*t1*t2
conj a3^a = a3*t2
end
kernel t1 t2
)"},
    {"Phi9(1^5)", 5, "(Z/5)^3",
     R"(pcgroup Phi9_1_5
gen a a1 a2 a3 a4
ord a=5 a1=5 a2=5 a3=5 a4=5
comm [a1,a] = a2
comm [a2,a] = a3
comm [a3,a] = a4
end
)",
     R"(pcgroup Phi9_1_5_star
gen a a1 a2 a3 a4 t1 t2 t3
ord a=5 a1=5 a2=5 a3=5 a4=5 t1=5 t2=5 t3=5
conj a1^a = a1*a2
conj a2^a = a2*a3
conj a2^a1 = a2*t2
conj a3^a = a3*a4
conj a3^a1 = a3*t3
conj a3^a2 = a3*t3^4
conj a4^a = a4*t1*t2^4*t3^3
conj a4^a1 = a4*t3
end
kernel t1 t2 t3
)"},
};

const std::size_t kFixedCount = sizeof(kFixed) / sizeof(kFixed[0]);

}  // namespace projembed::catalog_data

"""Published reference values for alpha = 1."""

# b_k(1), k = 0..47
B_Z1 = [
    "0.607788808822667", "0.531655773460623", "0.513427891887575", "0.507534434505874",
    "0.504835172165686", "0.503368518898357", "0.502482032582844", "0.501905070635327",
    "0.501508458210362", "0.501224082197933", "0.501013226345908", "0.500852549532634",
    "0.500727295329595", "0.500627761645442", "0.500547355966703", "0.500481471186175",
    "0.500426808722825", "0.500380956440347", "0.500342117324710", "0.500308930359149",
    "0.500280349444746", "0.500255559818526", "0.500233919258297", "0.500214916014164",
    "0.500198138240255", "0.500183251468526", "0.500169981794040", "0.500158103174469",
    "0.500147427732113", "0.500137798273680", "0.500129082466506", "0.500121168264855",
    "0.500113960288728", "0.500107376935035", "0.500101348056586", "0.500095813084832",
    "0.500090719501977", "0.500086021590060", "0.500081679401089", "0.500077657904668",
    "0.500073926279007", "0.500070457318386", "0.500067226935724", "0.500064213743185",
    "0.500061398697152", "0.500058764796504", "0.500056296825256", "0.500053981132248",
]

# a_k(1), k = 0..47; a_0 is the mass m_0
A_Z1 = [
    "0.2642411176571153", "0.06174799916059207", "0.06110639779446930", "0.06159770170459388",
    "0.06190038948667886", "0.06207694279947663", "0.06218661764444579", "0.06225891009402938",
    "0.06230892605966116", "0.06234491040894508", "0.06237163970905703", "0.06239202635370342",
    "0.06240792454776711", "0.06242055888438060", "0.06243076389952361", "0.06243912391137471",
    "0.06244605779295135", "0.06245187208765875", "0.06245679527042237", "0.06246100042276222",
    "0.06246462058754074", "0.06246775938221266", "0.06247049847158962", "0.06247290291817096",
    "0.06247502507158938", "0.06247690743561846", "0.06247858480860449", "0.06248008590029081",
    "0.06248143456640384", "0.06248265076085398", "0.06248375127700079", "0.06248475032972568",
    "0.06248566001620657", "0.06248649068343801", "0.06248725122345314", "0.06248794931205289",
    "0.06248859160306462", "0.06248918388734983", "0.06248973122368508", "0.06249023804706056",
    "0.06249070825874153", "0.06249114530151897", "0.06249155222286876", "0.06249193172818968",
    "0.06249228622586166", "0.06249261786552981", "0.06249292857075320", "0.06249322006694707",
]

# (node, weight) pairs of the printed 50-point rule, ascending nodes
GAUSS_50 = [
    ("1.0723e-3", "1.8699e-6"), ("3.5934e-3", "1.0454e-5"), ("7.5515e-3", "2.8145e-5"),
    ("1.2941e-2", "5.3562e-5"), ("1.9753e-2", "8.2141e-5"), ("2.7979e-2", "1.0792e-4"),
    ("3.7607e-2", "1.2564e-4"), ("4.8621e-2", "1.3232e-4"), ("6.1005e-2", "1.2782e-4"),
    ("7.4740e-2", "1.1435e-4"), ("8.9804e-2", "9.5435e-5"), ("1.0617e-1", "7.4720e-5"),
    ("1.2382e-1", "5.5130e-5"), ("1.4270e-1", "3.8478e-5"), ("1.6281e-1", "2.5488e-5"),
    ("1.8408e-1", "1.6071e-5"), ("2.0648e-1", "9.6726e-6"), ("2.2997e-1", "5.5708e-6"),
    ("2.5450e-1", "3.0779e-6"), ("2.8001e-1", "1.6354e-6"), ("3.0644e-1", "8.3766e-7"),
    ("3.3373e-1", "4.1466e-7"), ("3.6181e-1", "1.9888e-7"), ("3.9059e-1", "9.2662e-8"),
    ("4.2001e-1", "4.2055e-8"), ("4.4998e-1", "1.8645e-8"), ("4.8039e-1", "8.0995e-9"),
    ("5.1114e-1", "3.4581e-9"), ("5.4214e-1", "1.4559e-9"), ("5.7326e-1", "6.0646e-10"),
    ("6.0437e-1", "2.5087e-10"), ("6.3536e-1", "1.0343e-10"), ("6.6609e-1", "4.2669e-11"),
    ("6.9640e-1", "1.7684e-11"), ("7.2616e-1", "7.3924e-12"), ("7.5520e-1", "3.1302e-12"),
    ("7.8337e-1", "1.3481e-12"), ("8.1051e-1", "5.9302e-13"), ("8.3645e-1", "2.6750e-13"),
    ("8.6103e-1", "1.2420e-13"), ("8.8407e-1", "5.9564e-14"), ("9.0543e-1", "2.9587e-14"),
    ("9.2495e-1", "1.5253e-14"), ("9.4247e-1", "8.1661e-15"), ("9.5787e-1", "4.5341e-15"),
    ("9.7102e-1", "2.5981e-15"), ("9.8182e-1", "1.5189e-15"), ("9.9016e-1", "8.8292e-16"),
    ("9.9598e-1", "4.7777e-16"), ("9.9924e-1", "1.8745e-16"),
]

# maximal relative error of 16-digit runs (N = 50) against the 100-digit reference
MAX_REL_ERR_16 = {5: 7.8056e-16, 10: 8.8163e-15, 15: 6.0238e-13, 20: 2.6790e-11, 25: 4.8261e-9, 30: 4.2894e-7}
MAX_REL_ERR_30 = {5: 7.8238e-38, 10: 8.3718e-37, 15: 4.9234e-35, 20: 3.6960e-33, 25: 5.9650e-31, 30: 9.9114e-30}

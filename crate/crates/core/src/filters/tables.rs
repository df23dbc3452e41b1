// Generated from standard published wavelet coefficient tables. The dmey
// low-pass taps were re-orthogonalized with tools/dmey_orthogonalize.py.

#![allow(
    clippy::approx_constant,
    clippy::excessive_precision,
    clippy::unreadable_literal
)]

pub(crate) const HAAR_DEC_LO: [f64; 2] = [0.7071067811865476, 0.7071067811865476];

pub(crate) const HAAR_DEC_HI: [f64; 2] = [-0.7071067811865476, 0.7071067811865476];

pub(crate) const HAAR_REC_LO: [f64; 2] = [0.7071067811865476, 0.7071067811865476];

pub(crate) const HAAR_REC_HI: [f64; 2] = [0.7071067811865476, -0.7071067811865476];

pub(crate) const DB2_DEC_LO: [f64; 4] = [
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
];

pub(crate) const DB2_DEC_HI: [f64; 4] = [
    -0.48296291314453416,
    0.8365163037378079,
    -0.2241438680420134,
    -0.12940952255126037,
];

pub(crate) const DB2_REC_LO: [f64; 4] = [
    0.48296291314453416,
    0.8365163037378079,
    0.2241438680420134,
    -0.12940952255126037,
];

pub(crate) const DB2_REC_HI: [f64; 4] = [
    -0.12940952255126037,
    -0.2241438680420134,
    0.8365163037378079,
    -0.48296291314453416,
];

pub(crate) const DB4_DEC_LO: [f64; 8] = [
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
];

pub(crate) const DB4_DEC_HI: [f64; 8] = [
    -0.2303778133088965,
    0.7148465705529157,
    -0.6308807679298589,
    -0.027983769416859854,
    0.18703481171909309,
    0.030841381835560764,
    -0.0328830116668852,
    -0.010597401785069032,
];

pub(crate) const DB4_REC_LO: [f64; 8] = [
    0.2303778133088965,
    0.7148465705529157,
    0.6308807679298589,
    -0.027983769416859854,
    -0.18703481171909309,
    0.030841381835560764,
    0.0328830116668852,
    -0.010597401785069032,
];

pub(crate) const DB4_REC_HI: [f64; 8] = [
    -0.010597401785069032,
    -0.0328830116668852,
    0.030841381835560764,
    0.18703481171909309,
    -0.027983769416859854,
    -0.6308807679298589,
    0.7148465705529157,
    -0.2303778133088965,
];

pub(crate) const SYM8_DEC_LO: [f64; 16] = [
    -0.0033824159510061256,
    -0.0005421323317911481,
    0.03169508781149298,
    0.007607487324917605,
    -0.1432942383508097,
    -0.061273359067658524,
    0.4813596512583722,
    0.7771857517005235,
    0.3644418948353314,
    -0.05194583810770904,
    -0.027219029917056003,
    0.049137179673607506,
    0.003808752013890615,
    -0.01495225833704823,
    -0.0003029205147213668,
    0.0018899503327594609,
];

pub(crate) const SYM8_DEC_HI: [f64; 16] = [
    -0.0018899503327594609,
    -0.0003029205147213668,
    0.01495225833704823,
    0.003808752013890615,
    -0.049137179673607506,
    -0.027219029917056003,
    0.05194583810770904,
    0.3644418948353314,
    -0.7771857517005235,
    0.4813596512583722,
    0.061273359067658524,
    -0.1432942383508097,
    -0.007607487324917605,
    0.03169508781149298,
    0.0005421323317911481,
    -0.0033824159510061256,
];

pub(crate) const SYM8_REC_LO: [f64; 16] = [
    0.0018899503327594609,
    -0.0003029205147213668,
    -0.01495225833704823,
    0.003808752013890615,
    0.049137179673607506,
    -0.027219029917056003,
    -0.05194583810770904,
    0.3644418948353314,
    0.7771857517005235,
    0.4813596512583722,
    -0.061273359067658524,
    -0.1432942383508097,
    0.007607487324917605,
    0.03169508781149298,
    -0.0005421323317911481,
    -0.0033824159510061256,
];

pub(crate) const SYM8_REC_HI: [f64; 16] = [
    -0.0033824159510061256,
    0.0005421323317911481,
    0.03169508781149298,
    -0.007607487324917605,
    -0.1432942383508097,
    0.061273359067658524,
    0.4813596512583722,
    -0.7771857517005235,
    0.3644418948353314,
    0.05194583810770904,
    -0.027219029917056003,
    -0.049137179673607506,
    0.003808752013890615,
    0.01495225833704823,
    -0.0003029205147213668,
    -0.0018899503327594609,
];

pub(crate) const COIF3_DEC_LO: [f64; 18] = [
    -3.459977319727278e-05,
    -7.0983302506379e-05,
    0.0004662169598204029,
    0.0011175187708306303,
    -0.0025745176881367972,
    -0.009007976136730624,
    0.015880544863669452,
    0.03455502757329774,
    -0.08230192710629983,
    -0.07179982161915484,
    0.42848347637737,
    0.7937772226260872,
    0.40517690240911824,
    -0.06112339000297255,
    -0.06577191128146936,
    0.023452696142077168,
    0.007782596425672746,
    -0.003793512864380802,
];

pub(crate) const COIF3_DEC_HI: [f64; 18] = [
    0.003793512864380802,
    0.007782596425672746,
    -0.023452696142077168,
    -0.06577191128146936,
    0.06112339000297255,
    0.40517690240911824,
    -0.7937772226260872,
    0.42848347637737,
    0.07179982161915484,
    -0.08230192710629983,
    -0.03455502757329774,
    0.015880544863669452,
    0.009007976136730624,
    -0.0025745176881367972,
    -0.0011175187708306303,
    0.0004662169598204029,
    7.0983302506379e-05,
    -3.459977319727278e-05,
];

pub(crate) const COIF3_REC_LO: [f64; 18] = [
    -0.003793512864380802,
    0.007782596425672746,
    0.023452696142077168,
    -0.06577191128146936,
    -0.06112339000297255,
    0.40517690240911824,
    0.7937772226260872,
    0.42848347637737,
    -0.07179982161915484,
    -0.08230192710629983,
    0.03455502757329774,
    0.015880544863669452,
    -0.009007976136730624,
    -0.0025745176881367972,
    0.0011175187708306303,
    0.0004662169598204029,
    -7.0983302506379e-05,
    -3.459977319727278e-05,
];

pub(crate) const COIF3_REC_HI: [f64; 18] = [
    -3.459977319727278e-05,
    7.0983302506379e-05,
    0.0004662169598204029,
    -0.0011175187708306303,
    -0.0025745176881367972,
    0.009007976136730624,
    0.015880544863669452,
    -0.03455502757329774,
    -0.08230192710629983,
    0.07179982161915484,
    0.42848347637737,
    -0.7937772226260872,
    0.40517690240911824,
    0.06112339000297255,
    -0.06577191128146936,
    -0.023452696142077168,
    0.007782596425672746,
    0.003793512864380802,
];

pub(crate) const BIOR3_3_DEC_LO: [f64; 8] = [
    0.06629126073623882,
    -0.1988737822087165,
    -0.15467960838455727,
    0.9943689110435825,
    0.9943689110435825,
    -0.15467960838455727,
    -0.1988737822087165,
    0.06629126073623882,
];

pub(crate) const BIOR3_3_DEC_HI: [f64; 8] = [
    -0.0,
    0.0,
    -0.1767766952966369,
    0.5303300858899106,
    -0.5303300858899106,
    0.1767766952966369,
    -0.0,
    0.0,
];

pub(crate) const BIOR3_3_REC_LO: [f64; 8] = [
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0,
];

pub(crate) const BIOR3_3_REC_HI: [f64; 8] = [
    0.06629126073623882,
    0.1988737822087165,
    -0.15467960838455727,
    -0.9943689110435825,
    0.9943689110435825,
    0.15467960838455727,
    -0.1988737822087165,
    -0.06629126073623882,
];

pub(crate) const BIOR4_4_DEC_LO: [f64; 10] = [
    0.0,
    0.03782845550726404,
    -0.023849465019556843,
    -0.11062440441843718,
    0.37740285561283066,
    0.8526986790088938,
    0.37740285561283066,
    -0.11062440441843718,
    -0.023849465019556843,
    0.03782845550726404,
];

pub(crate) const BIOR4_4_DEC_HI: [f64; 10] = [
    -0.0,
    -0.06453888262869706,
    0.04068941760916406,
    0.41809227322161724,
    -0.7884856164055829,
    0.41809227322161724,
    0.04068941760916406,
    -0.06453888262869706,
    -0.0,
    0.0,
];

pub(crate) const BIOR4_4_REC_LO: [f64; 10] = [
    0.0,
    -0.06453888262869706,
    -0.04068941760916406,
    0.41809227322161724,
    0.7884856164055829,
    0.41809227322161724,
    -0.04068941760916406,
    -0.06453888262869706,
    0.0,
    0.0,
];

pub(crate) const BIOR4_4_REC_HI: [f64; 10] = [
    0.0,
    -0.03782845550726404,
    -0.023849465019556843,
    0.11062440441843718,
    0.37740285561283066,
    -0.8526986790088938,
    0.37740285561283066,
    0.11062440441843718,
    -0.023849465019556843,
    -0.03782845550726404,
];

pub(crate) const BIOR6_8_DEC_LO: [f64; 18] = [
    0.0,
    0.0019088317364812906,
    -0.0019142861290887667,
    -0.016990639867602342,
    0.01193456527972926,
    0.04973290349094079,
    -0.07726317316720414,
    -0.09405920349573646,
    0.4207962846098268,
    0.8259229974584023,
    0.4207962846098268,
    -0.09405920349573646,
    -0.07726317316720414,
    0.04973290349094079,
    0.01193456527972926,
    -0.016990639867602342,
    -0.0019142861290887667,
    0.0019088317364812906,
];

pub(crate) const BIOR6_8_DEC_HI: [f64; 18] = [
    -0.0,
    0.0,
    -0.0,
    0.014426282505624435,
    -0.014467504896790148,
    -0.07872200106262882,
    0.04036797903033992,
    0.41784910915027457,
    -0.7589077294536541,
    0.41784910915027457,
    0.04036797903033992,
    -0.07872200106262882,
    -0.014467504896790148,
    0.014426282505624435,
    -0.0,
    0.0,
    -0.0,
    0.0,
];

pub(crate) const BIOR6_8_REC_LO: [f64; 18] = [
    0.0,
    0.0,
    0.0,
    0.014426282505624435,
    0.014467504896790148,
    -0.07872200106262882,
    -0.04036797903033992,
    0.41784910915027457,
    0.7589077294536541,
    0.41784910915027457,
    -0.04036797903033992,
    -0.07872200106262882,
    0.014467504896790148,
    0.014426282505624435,
    0.0,
    0.0,
    0.0,
    0.0,
];

pub(crate) const BIOR6_8_REC_HI: [f64; 18] = [
    0.0,
    -0.0019088317364812906,
    -0.0019142861290887667,
    0.016990639867602342,
    0.01193456527972926,
    -0.04973290349094079,
    -0.07726317316720414,
    0.09405920349573646,
    0.4207962846098268,
    -0.8259229974584023,
    0.4207962846098268,
    0.09405920349573646,
    -0.07726317316720414,
    -0.04973290349094079,
    0.01193456527972926,
    0.016990639867602342,
    -0.0019142861290887667,
    -0.0019088317364812906,
];

pub(crate) const RBIO3_3_DEC_LO: [f64; 8] = [
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0,
];

pub(crate) const RBIO3_3_DEC_HI: [f64; 8] = [
    -0.06629126073623882,
    -0.1988737822087165,
    0.15467960838455727,
    0.9943689110435825,
    -0.9943689110435825,
    -0.15467960838455727,
    0.1988737822087165,
    0.06629126073623882,
];

pub(crate) const RBIO3_3_REC_LO: [f64; 8] = [
    0.06629126073623882,
    -0.1988737822087165,
    -0.15467960838455727,
    0.9943689110435825,
    0.9943689110435825,
    -0.15467960838455727,
    -0.1988737822087165,
    0.06629126073623882,
];

pub(crate) const RBIO3_3_REC_HI: [f64; 8] = [
    0.0,
    -0.0,
    0.1767766952966369,
    -0.5303300858899106,
    0.5303300858899106,
    -0.1767766952966369,
    0.0,
    -0.0,
];

pub(crate) const DMEY_DEC_LO: [f64; 62] = [
    -2.038951045783666e-08,
    -1.5540699659636432e-07,
    -2.9423139352173366e-08,
    2.8060314109616428e-08,
    -2.709772174886152e-07,
    -1.966039638954721e-06,
    2.7388291485515495e-06,
    4.206044760347475e-06,
    -1.425901601320816e-05,
    -1.1851974101613125e-05,
    5.879798801149795e-05,
    3.549483975378846e-05,
    -0.00012080640363609481,
    -0.00013140802710922677,
    0.00021743144172584384,
    0.0002720007168104244,
    -0.0003195109675646462,
    -0.0014846049475669238,
    0.0015268144976054395,
    0.0032319933093303537,
    -0.003857223471102959,
    -0.007343379720780717,
    0.011513189629372287,
    0.010143298712093483,
    -0.018973196781526012,
    -0.026907054009981432,
    0.05353222686908947,
    0.039526086384950664,
    -0.13281844042465682,
    -0.03734452889237872,
    0.44276143732923773,
    0.7471218146938965,
    0.4427614303347741,
    -0.037344526756035695,
    -0.13281842658644583,
    0.039526099754397546,
    0.05353212544829412,
    -0.026907052515848476,
    -0.018973213931323563,
    0.01014316472333684,
    0.011512774286768274,
    -0.007343655328499687,
    -0.003859706388454368,
    0.0032317610352586255,
    0.0015225446935045654,
    -0.0014838569271825488,
    -0.0002986326642758116,
    0.00027414734667907583,
    0.0002738259797370016,
    -0.00013100580322511387,
    -4.19809605643251e-05,
    3.946646209561982e-05,
    -1.1557442722465055e-06,
    -1.1565333790887344e-05,
    -1.1622172453570966e-05,
    3.831739184312276e-06,
    -2.295840016983078e-08,
    2.322267209657857e-08,
    -1.730864543885422e-07,
    -6.305485762979486e-09,
    1.362062900636822e-07,
    -1.7870363860706336e-08,
];

pub(crate) const DMEY_DEC_HI: [f64; 62] = [
    1.7870363860706336e-08,
    1.362062900636822e-07,
    6.305485762979486e-09,
    -1.730864543885422e-07,
    -2.322267209657857e-08,
    -2.295840016983078e-08,
    -3.831739184312276e-06,
    -1.1622172453570966e-05,
    1.1565333790887344e-05,
    -1.1557442722465055e-06,
    -3.946646209561982e-05,
    -4.19809605643251e-05,
    0.00013100580322511387,
    0.0002738259797370016,
    -0.00027414734667907583,
    -0.0002986326642758116,
    0.0014838569271825488,
    0.0015225446935045654,
    -0.0032317610352586255,
    -0.003859706388454368,
    0.007343655328499687,
    0.011512774286768274,
    -0.01014316472333684,
    -0.018973213931323563,
    0.026907052515848476,
    0.05353212544829412,
    -0.039526099754397546,
    -0.13281842658644583,
    0.037344526756035695,
    0.4427614303347741,
    -0.7471218146938965,
    0.44276143732923773,
    0.03734452889237872,
    -0.13281844042465682,
    -0.039526086384950664,
    0.05353222686908947,
    0.026907054009981432,
    -0.018973196781526012,
    -0.010143298712093483,
    0.011513189629372287,
    0.007343379720780717,
    -0.003857223471102959,
    -0.0032319933093303537,
    0.0015268144976054395,
    0.0014846049475669238,
    -0.0003195109675646462,
    -0.0002720007168104244,
    0.00021743144172584384,
    0.00013140802710922677,
    -0.00012080640363609481,
    -3.549483975378846e-05,
    5.879798801149795e-05,
    1.1851974101613125e-05,
    -1.425901601320816e-05,
    -4.206044760347475e-06,
    2.7388291485515495e-06,
    1.966039638954721e-06,
    -2.709772174886152e-07,
    -2.8060314109616428e-08,
    -2.9423139352173366e-08,
    1.5540699659636432e-07,
    -2.038951045783666e-08,
];

pub(crate) const DMEY_REC_LO: [f64; 62] = [
    -1.7870363860706336e-08,
    1.362062900636822e-07,
    -6.305485762979486e-09,
    -1.730864543885422e-07,
    2.322267209657857e-08,
    -2.295840016983078e-08,
    3.831739184312276e-06,
    -1.1622172453570966e-05,
    -1.1565333790887344e-05,
    -1.1557442722465055e-06,
    3.946646209561982e-05,
    -4.19809605643251e-05,
    -0.00013100580322511387,
    0.0002738259797370016,
    0.00027414734667907583,
    -0.0002986326642758116,
    -0.0014838569271825488,
    0.0015225446935045654,
    0.0032317610352586255,
    -0.003859706388454368,
    -0.007343655328499687,
    0.011512774286768274,
    0.01014316472333684,
    -0.018973213931323563,
    -0.026907052515848476,
    0.05353212544829412,
    0.039526099754397546,
    -0.13281842658644583,
    -0.037344526756035695,
    0.4427614303347741,
    0.7471218146938965,
    0.44276143732923773,
    -0.03734452889237872,
    -0.13281844042465682,
    0.039526086384950664,
    0.05353222686908947,
    -0.026907054009981432,
    -0.018973196781526012,
    0.010143298712093483,
    0.011513189629372287,
    -0.007343379720780717,
    -0.003857223471102959,
    0.0032319933093303537,
    0.0015268144976054395,
    -0.0014846049475669238,
    -0.0003195109675646462,
    0.0002720007168104244,
    0.00021743144172584384,
    -0.00013140802710922677,
    -0.00012080640363609481,
    3.549483975378846e-05,
    5.879798801149795e-05,
    -1.1851974101613125e-05,
    -1.425901601320816e-05,
    4.206044760347475e-06,
    2.7388291485515495e-06,
    -1.966039638954721e-06,
    -2.709772174886152e-07,
    2.8060314109616428e-08,
    -2.9423139352173366e-08,
    -1.5540699659636432e-07,
    -2.038951045783666e-08,
];

pub(crate) const DMEY_REC_HI: [f64; 62] = [
    -2.038951045783666e-08,
    1.5540699659636432e-07,
    -2.9423139352173366e-08,
    -2.8060314109616428e-08,
    -2.709772174886152e-07,
    1.966039638954721e-06,
    2.7388291485515495e-06,
    -4.206044760347475e-06,
    -1.425901601320816e-05,
    1.1851974101613125e-05,
    5.879798801149795e-05,
    -3.549483975378846e-05,
    -0.00012080640363609481,
    0.00013140802710922677,
    0.00021743144172584384,
    -0.0002720007168104244,
    -0.0003195109675646462,
    0.0014846049475669238,
    0.0015268144976054395,
    -0.0032319933093303537,
    -0.003857223471102959,
    0.007343379720780717,
    0.011513189629372287,
    -0.010143298712093483,
    -0.018973196781526012,
    0.026907054009981432,
    0.05353222686908947,
    -0.039526086384950664,
    -0.13281844042465682,
    0.03734452889237872,
    0.44276143732923773,
    -0.7471218146938965,
    0.4427614303347741,
    0.037344526756035695,
    -0.13281842658644583,
    -0.039526099754397546,
    0.05353212544829412,
    0.026907052515848476,
    -0.018973213931323563,
    -0.01014316472333684,
    0.011512774286768274,
    0.007343655328499687,
    -0.003859706388454368,
    -0.0032317610352586255,
    0.0015225446935045654,
    0.0014838569271825488,
    -0.0002986326642758116,
    -0.00027414734667907583,
    0.0002738259797370016,
    0.00013100580322511387,
    -4.19809605643251e-05,
    -3.946646209561982e-05,
    -1.1557442722465055e-06,
    1.1565333790887344e-05,
    -1.1622172453570966e-05,
    -3.831739184312276e-06,
    -2.295840016983078e-08,
    -2.322267209657857e-08,
    -1.730864543885422e-07,
    6.305485762979486e-09,
    1.362062900636822e-07,
    1.7870363860706336e-08,
];

// Chebyshev coefficients (variable 2p-1 on [0,1]) for the leading
// correction terms of the Riemann-Siegel remainder. Regenerate with
// tools/gen_fixtures.py.

pub(crate) const RS_C0: [f64; 29] = [
    0.6426672862397683775492,
    1.973151185663288833973e-61,
    0.2719729999978550670846,
    -5.312330115247316091464e-62,
    0.01073860581934028415440,
    -1.517808604356376026133e-62,
    -0.001374381529633661443846,
    1.214246883485100820906e-61,
    -0.0001246822188032067722768,
    -1.214246883485100820906e-61,
    -5.764599706783048036533e-7,
    1.138356453267282019600e-61,
    2.728067429580452225639e-7,
    -5.691782266336410097998e-62,
    8.077953059500470624065e-9,
    5.691782266336410097998e-62,
    -2.088460806886965447395e-10,
    -1.593699034574194827439e-61,
    -1.311556185473952705143e-11,
    -1.176301668376191420253e-61,
    -1.420798722808718516522e-14,
    2.200822476316745237892e-61,
    1.027170135793116157821e-14,
    -2.656165057623658045732e-62,
    1.397459881951837443435e-16,
    4.781097103722584482318e-61,
    -4.484118733952288325646e-18,
    6.204042670306687006817e-61,
    -1.183059957384528900048e-19,
];

pub(crate) const RS_C1: [f64; 30] = [
    8.433614455009519214082e-64,
    0.01069791392100300077065,
    8.929709422951255638440e-64,
    0.01717065124337788382066,
    2.282036852531987552046e-63,
    0.002793211149788471090232,
    1.785941884590251127688e-63,
    -0.00003637565371927504239794,
    2.480474839708682121789e-63,
    -0.00002710895523115088701220,
    2.678912826885376691532e-63,
    -0.000001048374986675277337634,
    -7.937519487067782789725e-64,
    5.886467166527571845197e-8,
    6.647672570419268086394e-63,
    4.322967268502779053007e-9,
    -3.671102762768849540248e-63,
    -1.136959158827371174505e-11,
    8.036738480656130074596e-63,
    -6.699833910355327480941e-12,
    1.389065910236861988202e-63,
    -1.007999765280847490939e-13,
    -8.929709422951255638440e-64,
    5.152488009222116299425e-15,
    -6.052358608889184377165e-63,
    1.521695447183697099637e-16,
    1.488284903825209273073e-63,
    -1.861946483368710104658e-18,
    -9.921899358834728487156e-64,
    -1.130184618424626527050e-19,
];

pub(crate) const RS_C2: [f64; 17] = [
    0.003146114924885384808637,
    -1.695684572526798025959e-12,
    -0.002308782624966255118948,
    -6.917507358400684514031e-13,
    0.00005769784870926032459665,
    3.944054007017929918421e-13,
    0.0003523886672978523235582,
    -1.352186837032871754393e-13,
    0.00002524668195664589693857,
    6.089763835847366640798e-15,
    -0.000003442825817197303806452,
    5.437634214279105858093e-15,
    -3.535078061605012436638e-7,
    -1.332171698819215488048e-16,
    3.730885933331147879712e-9,
    -5.904719179173325622706e-17,
    1.277699521521887019358e-9,
];

pub(crate) const RS_C3: [f64; 16] = [
    8.371233995255993323457e-7,
    0.00007123390007508605298178,
    -0.000001134865530981433112816,
    0.0002323433125545813791877,
    3.234207298137027619967e-7,
    -0.0001292993188491753415361,
    -4.240219483879891318535e-8,
    0.00001807457577459227108354,
    -1.306260238801106070236e-8,
    0.000006526178450497052932611,
    4.162614579613677453677e-9,
    -1.169662214289622696491e-7,
    3.157969491759510327421e-10,
    -7.349459422979871221310e-8,
    -5.023018801420111658903e-11,
    -1.775064653294513670149e-9,
];


// Reference table values transcribed from the published comparison data.
// Layout per table: rows are (m, n) pairs in printed order m in {0,1,-1}, n in 0..=3;
// columns are the four field configurations:
//   (B=0, flux=0), (B=2, flux=0), (B=0, flux=2), (B=2, flux=2).

pub struct SpectrumTable {
    pub id: u8,
    pub molecule: &'static str,
    pub cbar: i8,
    /// [m-block][n][column]; m-blocks ordered m = 0, 1, -1.
    pub values: [[[f64; 4]; 4]; 3],
}

pub const SPECTRUM_TABLES: [SpectrumTable; 9] = [
    SpectrumTable {
        id: 2,
        molecule: "H2",
        cbar: -1,
        values: [
            // m = 0
            [
                [-0.013053, -0.013854, 0.103048, -3.55212],
                [-0.065804, -0.069578, 0.043931, -4.10279],
                [-0.16948, -0.179751, -0.065444, -4.68431],
                [-0.319135, -0.341171, -0.220231, -5.29565],
            ],
            // m = 1
            [
                [0.015776, -0.027578, 0.248222, -3.79498],
                [-0.039107, -0.129652, 0.182814, -4.36778],
                [-0.144694, -0.283439, 0.067811, -4.97066],
                [-0.296072, -0.486006, -0.092034, -5.60263],
            ],
            // m = -1
            [
                [0.016833, 0.018142, 0.015776, -3.27284],
                [-0.035913, 0.010953, -0.039107, -3.80117],
                [-0.139578, -0.053657, -0.144694, -4.36115],
                [-0.289213, -0.172183, -0.296072, -4.95167],
            ],
        ],
    },
    SpectrumTable {
        id: 3,
        molecule: "H2",
        cbar: 0,
        values: [
            // m = 0
            [
                [-2.60098, -1.34027, -2.52351, -6.84623],
                [-3.02159, -1.6982, -2.94639, -7.54765],
                [-3.46683, -2.09468, -3.39374, -8.27534],
                [-3.93573, -2.528, -3.86462, -9.02861],
            ],
            // m = 1
            [
                [-2.58447, -1.57302, -2.41836, -7.1578],
                [-3.00582, -1.95979, -2.84351, -7.87648],
                [-3.45176, -2.38382, -3.29299, -8.62095],
                [-3.92132, -2.84353, -3.76584, -9.39056],
            ],
            // m = -1
            [
                [-2.57296, -1.07359, -2.58447, -6.49654],
                [-2.9936, -1.4021, -3.00582, -7.18069],
                [-3.43886, -1.77049, -3.45176, -7.89159],
                [-3.90777, -2.17695, -3.92132, -8.62852],
            ],
        ],
    },
    SpectrumTable {
        id: 4,
        molecule: "H2",
        cbar: 1,
        values: [
            // m = 0
            [
                [-6.65084, -3.97026, -6.58486, -10.5487],
                [-7.24556, -4.52822, -7.1809, -11.3709],
                [-7.85971, -5.11683, -7.7963, -12.2165],
                [-8.4929, -5.73507, -8.43068, -13.0851],
            ],
            // m = 1
            [
                [-6.6377, -4.31164, -6.6377, -10.1554],
                [-7.23286, -4.89028, -7.23286, -10.9634],
                [-7.84743, -5.49886, -7.84743, -11.7952],
                [-8.48103, -6.13643, -8.48103, -12.6502],
            ],
            // m = -1
            [
                [-6.62423, -3.59055, -6.49249, -10.9035],
                [-7.21894, -4.12773, -7.08983, -11.7399],
                [-7.83307, -4.69627, -7.70645, -12.5995],
                [-8.46623, -5.2951, -8.34199, -13.4817],
            ],
        ],
    },
    SpectrumTable {
        id: 5,
        molecule: "HCl",
        cbar: -1,
        values: [
            // m = 0
            [
                [-4.8842, -3.81271, -4.82949, -7.62984],
                [-5.37112, -4.27799, -5.31739, -8.24004],
                [-5.87571, -4.76469, -5.82291, -8.86802],
                [-6.39751, -5.27222, -6.34561, -9.51341],
            ],
            // m = 1
            [
                [-4.87253, -4.01808, -4.75515, -7.81566],
                [-5.35977, -4.49397, -5.24404, -8.43432],
                [-5.86467, -4.99099, -5.75051, -9.07058],
                [-6.38676, -5.50853, -6.27411, -9.72408],
            ],
            // m = -1
            [
                [-4.86447, -3.57716, -4.87253, -7.41507],
                [-5.35141, -4.03196, -5.35977, -8.01692],
                [-5.85601, -4.5085, -5.86467, -8.63674],
                [-6.37782, -5.00613, -6.38676, -9.27416],
            ],
        ],
    },
    SpectrumTable {
        id: 6,
        molecule: "HCl",
        cbar: 0,
        values: [
            // m = 0
            [
                [-0.445611, 4.30785, -0.414125, -1.0847],
                [-1.33944, 3.36605, -1.30808, -2.08829],
                [-2.24379, 2.41323, -2.21255, -3.10278],
                [-3.15867, 1.44942, -3.12756, -4.12818],
            ],
            // m = 1
            [
                [-0.440385, 3.97846, -0.366858, -1.36856],
                [-1.33427, 3.03263, -1.26087, -2.376],
                [-2.23869, 2.07578, -2.16541, -3.39435],
                [-3.15364, 1.10795, -3.08048, -4.42358],
            ],
            // m = -1
            [
                [-0.429794, 4.66087, -0.440385, -0.777565],
                [-1.32356, 3.72307, -1.33427, -1.77733],
                [-2.22785, 2.77425, -2.23869, -2.78801],
                [-3.14267, 1.81442, -3.15364, -3.80959],
            ],
        ],
    },
    SpectrumTable {
        id: 7,
        molecule: "HCl",
        cbar: 1,
        values: [
            // m = 0
            [
                [-2.0613, 4.69281, -2.03646, -0.761398],
                [-3.12423, 3.55274, -3.09937, -1.95181],
                [-4.19853, 2.40202, -4.17365, -3.15285],
                [-5.28416, 1.24067, -5.25926, -4.36452],
            ],
            // m = 1
            [
                [-2.05766, 4.35756, -2.05766, -0.445919],
                [-3.12062, 3.21427, -3.12062, -1.63326],
                [-4.19494, 2.06033, -4.19494, -2.83124],
                [-5.28059, 0.895753, -5.28059, -4.03984],
            ],
            // m = -1
            [
                [-2.04737, 5.0478, -1.99771, -1.05702],
                [-3.11022, 3.91099, -3.06051, -2.25048],
                [-4.18443, 2.76352, -4.13468, -3.45456],
                [-5.26997, 1.60542, -5.22019, -4.66927],
            ],
        ],
    },
    SpectrumTable {
        id: 8,
        molecule: "LiH",
        cbar: -1,
        values: [
            // m = 0
            [
                [-3.64587, -2.45747, -3.60184, -6.08325],
                [-4.02055, -2.80663, -3.97738, -6.58099],
                [-4.40904, -3.17457, -4.36669, -7.09355],
                [-4.81098, -3.56071, -4.76941, -7.62059],
            ],
            // m = 1
            [
                [-3.63662, -2.64604, -3.54159, -6.27342],
                [-4.01159, -3.00647, -3.91799, -6.77942],
                [-4.40035, -3.38533, -4.30812, -7.30005],
                [-4.80254, -3.78205, -4.71163, -7.835],
            ],
            // m = -1
            [
                [-3.62954, -2.24504, -3.63662, -5.86961],
                [-4.00424, -2.58294, -4.01159, -6.35916],
                [-4.39273, -2.93998, -4.40035, -6.86371],
                [-4.79468, -3.31555, -4.80254, -7.38292],
            ],
        ],
    },
    SpectrumTable {
        id: 9,
        molecule: "LiH",
        cbar: 0,
        values: [
            // m = 0
            [
                [-0.36375, 4.85352, -0.33877, -0.30138],
                [-1.01847, 4.14038, -0.99357, -1.08083],
                [-1.68203, 3.41769, -1.65721, -1.86961],
                [-2.35444, 2.6855, -2.32971, -2.6677],
            ],
            // m = 1
            [
                [-0.35972, 4.53924, -0.30093, -0.57817],
                [-1.01448, 3.8217, -0.95574, -1.36169],
                [-1.6781, 3.09463, -1.61941, -2.15453],
                [-2.35056, 2.35807, -2.29192, -2.95667],
            ],
            // m = -1
            [
                [-0.35086, 5.18822, -0.35972, -0.00466],
                [-1.00551, 4.47944, -1.01448, -0.78007],
                [-1.669, 3.76109, -1.6781, -1.56482],
                [-2.34134, 3.03323, -2.35056, -2.35889],
            ],
        ],
    },
    SpectrumTable {
        id: 10,
        molecule: "LiH",
        cbar: 1,
        values: [
            // m = 0
            [
                [-0.9559, 6.57443, -0.93635, 1.29034],
                [-1.72432, 5.70897, -1.70473, 0.37199],
                [-2.50261, 4.83468, -2.48297, -0.55518],
                [-3.29071, 3.95157, -3.27104, -1.49118],
            ],
            // m = 1
            [
                [-0.95313, 6.24938, -0.95313, 1.59817],
                [-1.72157, 5.38052, -1.72157, 0.68304],
                [-2.49987, 4.50282, -2.49987, -0.24092],
                [-3.28799, 3.61629, -3.28799, -1.1737],
            ],
            // m = -1
            [
                [-0.94464, 6.91656, -0.90558, 0.99964],
                [-1.71297, 6.05454, -1.67381, 0.07811],
                [-2.49117, 5.18369, -2.45192, -0.85226],
                [-3.27918, 4.304, -3.23986, -1.79145],
            ],
        ],
    },
];

/// Kratzer comparison, reduced units: (present, reference) pairs.
pub const KRATZER_TABLE: [(f64, f64); 6] = [
    (9.63436, 9.63435995),
    (27.87504, 27.8750413),
    (44.85073, 44.85072948),
    (60.67575, 60.67574666),
    (75.45179, 75.45178619),
    (89.26955, 89.26955046),
];

/// Vibrational comparison for H2 against Morse-potential literature values.
/// Columns: present, then four literature columns (NaN marks a blank cell).
pub const MORSE_COMPARISON: [[f64; 5]; 7] = [
    [0.521945198, 0.5124, 0.5162, 0.516, 0.5137],
    [0.822531792, 0.9935, 1.0032, 1.0029, 0.9961],
    [1.092128962, 1.443, 1.4615, 1.4612, f64::NAN],
    [1.334854672, 1.862, 1.8917, 1.8912, f64::NAN],
    [1.554164922, 2.25, 2.2937, 2.2932, f64::NAN],
    [1.752977462, 2.606, 2.6674, f64::NAN, f64::NAN],
    [1.933769336, 2.931, 3.0124, f64::NAN, f64::NAN],
];

/// Field configuration of each value column, as (b_raw, flux_quanta).
pub const COLUMN_FIELDS: [(f64, f64); 4] = [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (2.0, 2.0)];

/// Printed m order of the row blocks.
pub const M_ORDER: [i32; 3] = [0, 1, -1];

impl SpectrumTable {
    pub fn value(&self, m: i32, n: u32, column: usize) -> f64 {
        let mi = M_ORDER
            .iter()
            .position(|&x| x == m)
            .expect("tables carry m in {0, 1, -1}");
        self.values[mi][n as usize][column]
    }
}

pub fn table_by_id(id: u8) -> Option<&'static SpectrumTable> {
    SPECTRUM_TABLES.iter().find(|t| t.id == id)
}

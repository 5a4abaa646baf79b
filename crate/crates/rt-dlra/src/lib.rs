pub mod tensor {
    pub type Matrix = nalgebra::DMatrix<f64>;
}

static int f_gold ( int n ) {
    switch ( n % 3 ) {
        case 0 :
            return n / 3 ;
        case 1 :
            return n + 1 ;
        default :
            return - 1 ;
    }
}

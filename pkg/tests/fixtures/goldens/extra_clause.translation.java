static final public int f_gold ( int x ) {
    int temp = x ;
    int n = 0 ;
    int sm = 0 ;
    while ( ( x != 0 ) && ( x % 10 == 0 ) ) {
        int r = x % 10 ;
        sm = sm * 10 + r ;
        n ++ ;
        x = x / 10 ;
    }
    return ( sm == temp ) ? 1 : 0 ;
}

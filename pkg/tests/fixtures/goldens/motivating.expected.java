static int f_gold ( int x ) {
    int s = 0 ;
    while ( x != 0 ) {
        s += x % 10 ;
        x = x / 10 ;
    }
    return s ;
}
